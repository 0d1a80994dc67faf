from hypothesis import HealthCheck, settings

# fixed-seed runs: every property suite is reproducible
settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

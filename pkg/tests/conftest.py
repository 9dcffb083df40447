from hypothesis import HealthCheck, settings

# first calls may hit numba JIT compilation; wall-clock deadlines are noise here
settings.register_profile(
    "rct",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("rct")

from hypothesis import HealthCheck, settings

# Exact octonion and matrix arithmetic is slow enough to trip the default deadline.
settings.register_profile(
    "relmin",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("relmin")

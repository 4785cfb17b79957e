import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "flagforge",
    derandomize=True,
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "flagforge"))

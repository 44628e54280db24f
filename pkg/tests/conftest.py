"""Shared test configuration and small input generators."""

import random

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


def random_exact_pair(rng: random.Random, max_len=32, sigmas=(1, 2, 4, 8)):
    sigma = rng.choice(sigmas)
    m, n = rng.randint(0, max_len), rng.randint(0, max_len)
    xs = tuple(rng.randrange(sigma) for _ in range(m))
    ys = tuple(rng.randrange(sigma) for _ in range(n))
    return xs, ys, sigma


def random_op_pair(rng: random.Random, max_len=24, duplicates=False):
    hi = 4 if duplicates else 10**6
    m, n = rng.randint(0, max_len), rng.randint(0, max_len)
    xs = tuple(rng.randint(1, hi) for _ in range(m))
    ys = tuple(rng.randint(1, hi) for _ in range(n))
    return xs, ys

import pytest

from betahole.numberfield import BetaKind, make_context
from betahole.survivor import brute_force_S

P_MAX = 20


@pytest.fixture(scope="session")
def sweeps():
    """Brute-force records for every kind and p = 1..20, computed once."""
    out = {}
    for kind in BetaKind:
        ctx = make_context(kind)
        for p in range(1, P_MAX + 1):
            out[(kind, p)] = brute_force_S(ctx, p)
    return out

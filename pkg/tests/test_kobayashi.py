"""Chain-of-discs upper bounds on catalog domains."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from hypmet.distances import poincare_distance
from hypmet.errors import ContractError, DomainError, SearchBudgetError
from hypmet.kobayashi import (
    CatalogDomain,
    ChainLink,
    DiscChain,
    SearchConfig,
    catalog_domains,
    cauchy_escape_demo,
    chain_value,
    kobayashi_upper_bound,
    punctured_bidisc_bound,
    push_chain,
)
from hypmet.maps import automorphism_map
from hypmet.mobius import DiscAutomorphism

small = st.complex_numbers(max_magnitude=0.7, allow_nan=False, allow_infinity=False)


def test_chain_validation():
    # links must send 0 to the recorded start and a to the next start
    link = ChainLink(map=lambda z: z + 0.1, a=0.5 + 0j)
    DiscChain(links=(link,), endpoints=(0.1 + 0j, 0.6 + 0j))  # consistent
    with pytest.raises(ContractError):
        DiscChain(links=(link,), endpoints=(0j, 0.6 + 0j))
    with pytest.raises(ContractError):
        DiscChain(links=(link,), endpoints=(0.1 + 0j,))


def test_chain_link_rejects_boundary_parameter():
    with pytest.raises(ContractError):
        ChainLink(map=lambda z: z, a=1.0 + 0j)


def test_disc_bound_is_exact():
    p, q = 0.3 + 0.2j, -0.4 - 0.1j
    v, chain = kobayashi_upper_bound("disc", p, q)
    assert abs(v - poincare_distance(p, q)) < 1e-12
    assert chain.value == v
    assert chain_value(chain) == v


@settings(max_examples=30, deadline=None)
@given(p=small, q=small)
def test_disc_bound_symmetric(p, q):
    a, _ = kobayashi_upper_bound("disc", p, q)
    b, _ = kobayashi_upper_bound("disc", q, p)
    assert abs(a - b) < 1e-9


def test_plane_bound_collapses():
    v, _ = kobayashi_upper_bound("plane", 0j, 5.0 + 3.0j)
    assert v < 1e-6


def test_punctured_plane_bound_collapses():
    v, _ = kobayashi_upper_bound("punctured-plane", 1.0 + 0j, -2.0 + 1.0j)
    assert v < 1e-6


def test_bidisc_bound_is_max_formula():
    pairs = [((0j, 0j), (0.5 + 0j, 0.2 + 0j)),
             ((0.1 + 0.1j, -0.2j), (-0.3 + 0j, 0.4 + 0.1j))]
    for p, q in pairs:
        v, _ = kobayashi_upper_bound("bidisc", p, q)
        want = max(poincare_distance(p[0], q[0]), poincare_distance(p[1], q[1]))
        assert abs(v - want) < 1e-12


def test_punctured_bidisc_corner_route():
    p, q = (0.3 + 0j, 0.2 + 0j), (0.5 + 0j, 0.4 + 0j)
    v, chain = kobayashi_upper_bound("punctured-bidisc", p, q)
    assert v < math.inf
    assert len(chain.links) <= 4
    assert chain.endpoints[0] == p and chain.endpoints[-1] == q


def test_punctured_bidisc_waypoint_route():
    # both endpoints sit on the z1 = 0 axis: corner moves are unavailable
    p, q = (0j, 0.3 + 0j), (0j, 0.5 + 0j)
    v, chain = kobayashi_upper_bound("punctured-bidisc", p, q)
    assert len(chain.links) == 3
    assert abs(v - poincare_distance(0.3 + 0j, 0.5 + 0j)) < 1e-6


def test_search_budget_error():
    p, q = (0j, 0.3 + 0j), (0j, 0.5 + 0j)
    with pytest.raises(SearchBudgetError):
        kobayashi_upper_bound("punctured-bidisc", p, q, SearchConfig(max_links=2))


def test_membership_enforced():
    with pytest.raises(DomainError):
        kobayashi_upper_bound("disc", 1.5 + 0j, 0j)
    with pytest.raises(DomainError):
        kobayashi_upper_bound("punctured-plane", 0j, 1.0 + 0j)
    with pytest.raises(DomainError):
        kobayashi_upper_bound("no-such-domain", 0j, 0.1 + 0j)


def test_trivial_pair():
    v, chain = kobayashi_upper_bound("disc", 0.2j, 0.2j)
    assert v == 0.0
    assert len(chain.links) == 1
    assert chain.links[0].name == "constant"


@pytest.mark.parametrize("n", [1, 2, 5, 10, 20])
def test_punctured_bidisc_bound_values(n):
    v, chain = punctured_bidisc_bound(n)
    assert abs(v - 2.0 ** (1 - n)) < 1e-12
    assert len(chain.links) == 2


def test_punctured_bidisc_bound_rejects():
    with pytest.raises(DomainError):
        punctured_bidisc_bound(0)


def test_cauchy_escape_demo_structure():
    d = cauchy_escape_demo(10)
    assert d["cauchy"]
    assert d["tail_bound"] < d["tail_threshold"]
    assert d["limit_point"] == (0j, 0j)
    assert not d["origin_in_domain"]
    rows = d["rows"]  # n runs 1..N-1
    assert len(rows) == 9
    assert rows[-1]["n"] == 9
    env = [r["envelope"] for r in rows]
    assert env == sorted(env, reverse=True)
    for r in rows:
        assert r["step_bound"] <= r["envelope"] + 1e-15


def test_cauchy_demo_small_N():
    # threshold 2^{3-N} only dominates the tail once N is large enough
    d = cauchy_escape_demo(3)
    assert d["tail_bound"] < d["tail_threshold"]


def test_push_chain_preserves_value():
    _, chain = kobayashi_upper_bound("disc", 0.1 + 0.1j, -0.3 + 0.2j)
    t = automorphism_map(DiscAutomorphism(rotation_angle=0.8, mobius_center=0.2j))
    pushed = push_chain(t, chain)
    assert abs(pushed.value - chain.value) < 1e-12
    assert abs(pushed.endpoints[0] - complex(t.eval(0.1 + 0.1j))) < 1e-12


def test_catalog_domains_complete():
    doms = catalog_domains()
    assert set(doms) == {"disc", "plane", "punctured-plane", "bidisc",
                         "punctured-bidisc"}
    assert doms["bidisc"].dimension == 2


def test_catalog_domain_family_validation():
    # a family leaving the claimed domain is caught at construction
    with pytest.raises(ContractError):
        CatalogDomain(
            name="broken",
            membership=lambda p: abs(p) < 0.5,
            disc_families=(lambda z: z,),
        )

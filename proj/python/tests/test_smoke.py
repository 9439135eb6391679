from fractions import Fraction
import math

import pytest

import ramsey_forge as rf


def test_graph_basics():
    assert rf.count_cliques(rf.Graph.complete(5), 3) == 10
    assert rf.enumerate_cliques(rf.Graph.petersen(), 3) == []
    k33 = rf.Graph.complete_multipartite([3, 3])
    parts = rf.contains_balanced_multipartite(k33, 3, 2)
    assert sorted(parts) == [[0, 1, 2], [3, 4, 5]]
    assert rf.contains_balanced_multipartite(rf.Graph.cycle(6), 3, 2) is None
    g = rf.sample_gnp_half(20, 3)
    assert rf.complement(rf.complement(g)) == g


def test_embedding_round_trip():
    cert = rf.embed_multipartite([3, 3], 4)
    ok, violations = rf.verify_certificate(cert, 4)
    assert ok and violations == []
    assert rf.forbidden_subgraph_audit(cert, 4)
    moved = [list(p) for p in cert.points]
    moved[0][0] += 1e-3
    ok, violations = rf.verify_certificate(
        rf.RealizationCertificate(moved, cert.graph), 4)
    assert not ok and all(v[0] == 0 for v in violations)


def test_errors_map_to_python():
    with pytest.raises(rf.DomainError, match=r"parts exceed \[d/2\]"):
        rf.embed_multipartite([3, 3, 3], 4)
    with pytest.raises(ValueError):
        rf.pack_exact(20, 3)


def test_packings():
    assert len(rf.pack_exact(7, 3)) == 7
    p = rf.pack_greedy(40, 3, seed=1)
    assert rf.validate_packing(p) == ""
    assert rf.is_maximal(p)
    assert p.mode == "greedy"


def test_expectations_are_exact_fractions():
    h = rf.sample_gnp_half(6, 2)
    p = rf.pack_exact(6, 3)
    exact = rf.exact_expectation(h, p, 3)
    assert isinstance(exact, Fraction)
    assert exact == rf.brute_force_expectation(h, p, 3)
    report = rf.monte_carlo_expectation(h, p, 3, 2000, seed=4)
    assert report["exact"] == exact


def test_bounds():
    assert rf.avoidance_probability_exact(3, 3) == Fraction(7, 8)
    assert rf.avoidance_probability_exact(4, 3) == Fraction(41, 64)
    assert abs(rf.lower_bound_exponent(4, 3) - math.log2(8 / 7) / 6) < 1e-12
    assert rf.upper_bound(8, 4) == 72
    assert isinstance(rf.upper_bound(40, 4, allow_asymptotic=True), float)

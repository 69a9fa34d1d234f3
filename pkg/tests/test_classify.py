import pytest

from clifcpt.algebra import MetricSignature, Multivector
from clifcpt.classify import (
    dimension_audit,
    idempotent_factor_count,
    primitive_idempotent,
    radon_hurwitz,
    ring_type,
)


def test_radon_hurwitz_table():
    assert [radon_hurwitz(i) for i in range(8)] == [0, 1, 2, 2, 3, 3, 3, 3]
    assert radon_hurwitz(4) == 3
    assert radon_hurwitz(10) == 6
    assert radon_hurwitz(-2) == -1


def test_radon_hurwitz_recurrence():
    for i in range(-16, 17):
        assert radon_hurwitz(i + 8) == radon_hurwitz(i) + 4


def test_ring_type_examples():
    assert ring_type(1, 3).tag == "H"
    assert ring_type(3, 1).tag == "R"
    assert ring_type(0, 3).tag == "H+H"
    assert ring_type(0, 1).tag == "C"
    assert ring_type(1, 0).tag == "R+R"
    assert ring_type(0, 0).tag == "R"
    assert ring_type(2, 0).tag == "R"
    assert ring_type(0, 2).tag == "H"


def test_ring_type_translation_invariance():
    for p in range(6):
        for q in range(6):
            assert ring_type(p + 4, q + 4).tag == ring_type(p, q).tag


def test_idempotent_factor_count_examples():
    assert idempotent_factor_count(0, 0) == 0
    assert idempotent_factor_count(1, 3) == 1
    assert idempotent_factor_count(2, 0) == 1


def test_primitive_idempotent_small_cases():
    f00 = primitive_idempotent(MetricSignature(0, 0))
    assert f00.k == 0
    assert f00.f == Multivector.scalar(MetricSignature(0, 0), 1)

    f13 = primitive_idempotent(MetricSignature(1, 3))
    assert f13.k == 1
    assert f13.generators_used == (1,)  # e{1}
    assert str(f13.f) == "1/2*e{} + 1/2*e{1}"

    f20 = primitive_idempotent(MetricSignature(2, 0))
    assert f20.generators_used == (1,)
    assert str(f20.f) == "1/2*e{} + 1/2*e{1}"


@pytest.mark.parametrize("n", range(0, 11))
def test_idempotent_property_all_signatures(n):
    for p in range(n + 1):
        q = n - p
        sig = MetricSignature(p, q)
        data = primitive_idempotent(sig)
        assert data.k == idempotent_factor_count(p, q)
        assert data.f * data.f == data.f
        assert len(data.generators_used) == data.k
        assert len(data.f.terms) == 1 << data.k


def test_dimension_audit_examples():
    a13 = dimension_audit(1, 3)
    assert (a13.passed, a13.summands, a13.matrix_size, a13.ring_dim) == (True, 1, 2, 4)
    a20 = dimension_audit(2, 0)
    assert (a20.passed, a20.summands, a20.matrix_size, a20.ring_dim) == (True, 1, 2, 1)
    a03 = dimension_audit(0, 3)
    assert (a03.passed, a03.summands, a03.matrix_size, a03.ring_dim) == (True, 2, 1, 4)


def test_dimension_audit_all_signatures():
    for n in range(0, 11):
        for p in range(n + 1):
            assert dimension_audit(p, n - p).passed


def test_idempotent_generator_set_is_lexicographically_least():
    from itertools import combinations

    from clifcpt.algebra import blade_square_sign, blades_commute
    from clifcpt.classify import _gf2_reduce

    for p in range(0, 5):
        for q in range(0, 5 - p):
            sig = MetricSignature(p, q)
            data = primitive_idempotent(sig)
            if data.k == 0:
                continue
            candidates = [
                m for m in range(1, 1 << sig.n) if blade_square_sign(m, sig) == 1
            ]
            best = None
            for combo in combinations(candidates, data.k):
                if not all(
                    blades_commute(x, y, sig) for x, y in combinations(combo, 2)
                ):
                    continue
                pivots = {}
                ok = True
                for m in combo:
                    red = _gf2_reduce(m, pivots)
                    if red == 0:
                        ok = False
                        break
                    pivots[red.bit_length() - 1] = red
                if ok:
                    best = combo
                    break
            assert best == data.generators_used

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pga import (
    FiniteGroup,
    SpecError,
    divisors,
    factorize,
    is_prime_power,
    parse_group_spec,
    realize,
    render_group_spec,
    spec_order,
    totient,
)
from pga.groups import AbelianSpec, CyclicSpec, HomocyclicSpec, ProductSpec, QuaternionSpec

from _support import CORPUS, bundle


def test_parse_cyclic():
    assert parse_group_spec("Z(12)") == CyclicSpec(12)


def test_parse_homocyclic():
    spec = parse_group_spec("Z(4)^2")
    assert spec == HomocyclicSpec(4, 2)
    assert spec.prime_power == (2, 2)


def test_parse_rejects_non_prime_power_base():
    with pytest.raises(SpecError, match="not a prime power"):
        parse_group_spec("Z(6)^2")


def test_parse_power_one_normalizes_to_cyclic():
    assert parse_group_spec("Z(4)^1") == CyclicSpec(4)


def test_parse_nested_product():
    spec = parse_group_spec("P(P(Z(2),Z(3)),Q8)")
    assert spec == ProductSpec(ProductSpec(CyclicSpec(2), CyclicSpec(3)), QuaternionSpec())


def test_parse_whitespace_tolerated():
    assert parse_group_spec(" P( Q8 , Z(3) ) ") == ProductSpec(QuaternionSpec(), CyclicSpec(3))


@pytest.mark.parametrize(
    "text",
    ["", "Z(", "Z()", "Z(0)", "Foo", "Z(6)x", "Ab[]", "Sym(6)", "P(Z(2))", "Q8Q8"],
)
def test_parse_errors_carry_position(text):
    with pytest.raises(SpecError) as err:
        parse_group_spec(text)
    assert err.value.position is not None


@pytest.mark.parametrize("text", list(CORPUS) + ["Ab[2,2]", "P(P(Z(2),Z(3)),Q8)", "Dih(7)", "Sym(5)"])
def test_spec_round_trip(text):
    spec = parse_group_spec(text)
    assert parse_group_spec(render_group_spec(spec)) == spec


def _spec_strategy():
    leaf = st.one_of(
        st.integers(1, 30).map(CyclicSpec),
        st.tuples(st.sampled_from([2, 3, 4, 5, 8, 9]), st.integers(2, 3)).map(
            lambda t: HomocyclicSpec(*t)
        ),
        st.lists(st.integers(1, 12), min_size=1, max_size=3).map(
            lambda ds: AbelianSpec(tuple(ds))
        ),
        st.just(QuaternionSpec()),
    )
    return st.recursive(
        leaf, lambda sub: st.tuples(sub, sub).map(lambda t: ProductSpec(*t)), max_leaves=4
    )


@given(_spec_strategy())
def test_spec_round_trip_random(spec):
    assert parse_group_spec(render_group_spec(spec)) == spec


def test_realize_cyclic_table():
    g = realize("Z(6)")
    assert g.size == 6
    for i in range(6):
        for j in range(6):
            assert g.mul(i, j) == (i + j) % 6


def test_realize_klein_four():
    g = realize("Ab[2,2]")
    assert g.size == 4
    assert all(g.element_order(x) == 2 for x in range(1, 4))


def test_realize_product_order_multiplies():
    g = realize("P(Q8,Z(3))")
    assert g.size == 24
    assert not g.is_abelian


def test_realize_rejects_large_order():
    with pytest.raises(SpecError, match="exceeds"):
        realize("Z(2100)")
    assert realize("Z(2100)", max_order=2100).size == 2100


def test_identity_is_element_zero():
    for spec in CORPUS:
        g = bundle(spec).g
        assert g.element_order(0) == 1
        assert g.mul(0, 1) == 1 if g.size > 1 else True


def test_element_order_examples():
    assert realize("Z(6)").element_order(0) == 1
    assert realize("Z(12)").element_order(8) == 3
    q8 = realize("Q8")
    assert q8.labels[1] == "-1" and q8.element_order(1) == 2


def test_cyclic_subgroup_examples():
    z6 = realize("Z(6)")
    assert z6.cyclic_subgroup(2) == {0, 2, 4}
    assert z6.cyclic_subgroup(0) == {0}
    q8 = realize("Q8")
    assert q8.cyclic_subgroup(2) == {0, 1, 2, 3}  # <i> = {1, -1, i, -i}


def test_gen_set_examples():
    z6 = realize("Z(6)")
    assert z6.gen_set(1) == {1, 5}
    assert z6.gen_set(0) == {0}
    z12 = realize("Z(12)")
    assert z12.gen_set(2) == {2, 10}


def test_gen_set_size_is_totient_of_order():
    for spec in CORPUS:
        g = bundle(spec).g
        for x in range(g.size):
            assert len(g.gen_set(x)) == totient(g.element_order(x))


def test_element_order_divides_group_order():
    for spec in CORPUS:
        g = bundle(spec).g
        for x in range(g.size):
            assert g.size % g.element_order(x) == 0


def test_centralizer_examples():
    klein = realize("Ab[2,2]")
    assert all(klein.centralizer_size(x) == 4 for x in range(4))
    s3 = realize("Sym(3)")
    transpositions = [x for x in range(6) if s3.element_order(x) == 2]
    assert all(s3.centralizer_size(x) == 2 for x in transpositions)
    q8 = realize("Q8")
    assert q8.centralizer_size(1) == 8  # -1 is central


def test_homocyclic_order_counts():
    # Z(q)^k with q = p^m has p^(t*k) - p^((t-1)*k) elements of order p^t
    for spec_text, p, m, k in [("Z(4)^2", 2, 2, 2), ("Z(3)^2", 3, 1, 2), ("Z(2)^3", 2, 1, 3)]:
        g = realize(spec_text)
        for t in range(1, m + 1):
            count = sum(1 for x in range(g.size) if g.element_order(x) == p**t)
            assert count == p ** (t * k) - p ** ((t - 1) * k)


def test_bad_table_rejected():
    table = np.zeros((3, 3), dtype=np.int32)  # constant table: no inverses
    table[0] = [0, 1, 2]
    table[:, 0] = [0, 1, 2]
    table[1, 1] = 1  # 1*1 = 1 while 1 has order forced... breaks associativity/inverse
    table[1, 2] = 2
    table[2, 1] = 2
    table[2, 2] = 2
    with pytest.raises(ValueError):
        FiniteGroup(table, ("e", "a", "b"), "broken")


def test_non_associative_table_rejected():
    # latin square with identity that is not a group (order 5 loop)
    table = np.array(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ],
        dtype=np.int32,
    )
    with pytest.raises(ValueError, match="associative"):
        FiniteGroup(table, tuple("eabcd"), "loop5")


def test_symmetric_group_realization():
    s4 = realize("Sym(4)")
    assert s4.size == 24
    assert not s4.is_abelian
    with pytest.raises(SpecError):
        realize("Sym(6)")


def test_arithmetic_helpers():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert is_prime_power(8) == (2, 3)
    assert is_prime_power(12) is None
    assert is_prime_power(1) is None
    assert totient(12) == 4
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert spec_order(parse_group_spec("P(Q8,Z(3))")) == 24


def test_labels_are_unique():
    for spec in CORPUS:
        g = bundle(spec).g
        assert len(set(g.labels)) == g.size

import itertools

import pytest

from designforge import designs
from designforge.designs import (
    AbelianGroup,
    DifferenceSet,
    IncidenceStructure,
    complement_design,
    dev,
    difference_multiset,
    difference_set_search,
    is_numerical_multiplier,
    minus_one_obstruction,
    one_dim_affine_block,
    paley,
    pg_design,
    verify_symmetric,
)


def Zn(n):
    return AbelianGroup([n])


FANO_D = DifferenceSet(Zn(7), frozenset({1, 2, 4}))


def test_verify_symmetric_paley11():
    assert verify_symmetric(dev(paley(11))).as_tuple() == (11, 5, 2)


def test_verify_symmetric_fano():
    assert verify_symmetric(dev(FANO_D)).as_tuple() == (7, 3, 1)


def test_verify_rejects_wrong_block_count():
    S = dev(FANO_D)
    assert verify_symmetric(IncidenceStructure(7, S.blocks[:-1])) is None


def test_difference_multiset():
    assert set(difference_multiset(paley(11)).values()) == {2}
    assert set(difference_multiset(FANO_D).values()) == {1}
    D = DifferenceSet(Zn(5), frozenset({0, 1}))
    assert difference_multiset(D) == {1: 1, 2: 0, 3: 0, 4: 1}
    assert designs.is_difference_set(D) is None


def test_numerical_multipliers_mod_11():
    D = paley(11)
    assert is_numerical_multiplier(D, 3)  # 3 is a QR mod 11
    assert not is_numerical_multiplier(D, 2)  # 2 is a non-residue
    with pytest.raises(ValueError):
        is_numerical_multiplier(D, 22)


def test_minus_one_trivially_multiplier_in_exponent_two():
    G = AbelianGroup([2, 2, 2, 2])
    D = difference_set_search(G, 6, 2)
    assert D is not None
    assert is_numerical_multiplier(D, -1)
    rep = minus_one_obstruction(D)
    assert rep["verdict"] == "consistent"
    assert rep["v_even"] and rep["lambda_even"] and rep["k_minus_lambda_square"]


def test_minus_one_vacuous_for_paley11():
    rep = minus_one_obstruction(paley(11))
    assert not rep["minus_one_multiplier"]  # -1 is a non-residue for 11 = 3 mod 4
    assert rep["verdict"] == "consistent"


def test_paley_parameters():
    assert verify_symmetric(dev(paley(11))).as_tuple() == (11, 5, 2)
    assert verify_symmetric(dev(paley(7))).as_tuple() == (7, 3, 1)
    assert verify_symmetric(complement_design(dev(paley(7)))).as_tuple() == (7, 4, 2)
    assert verify_symmetric(dev(paley(19))).as_tuple() == (19, 9, 4)
    with pytest.raises(ValueError):
        paley(13)  # 13 = 1 mod 4


@pytest.mark.parametrize("q", [7, 11, 19, 23, 27, 31])
def test_paley_difference_counts(q):
    counts = difference_multiset(paley(q))
    assert set(counts.values()) == {(q - 3) // 4}


def test_one_dim_affine_block_37():
    D, predicted = one_dim_affine_block(37, 1, 4)
    assert predicted.as_tuple() == (37, 9, 2)
    assert verify_symmetric(dev(D)).as_tuple() == (37, 9, 2)


def test_one_dim_affine_block_11_is_paley():
    D, predicted = one_dim_affine_block(11, 1, 2)
    assert predicted.as_tuple() == (11, 5, 2)
    assert D.elements == paley(11).elements


def test_one_dim_affine_block_rejects_trivial():
    with pytest.raises(ValueError):
        one_dim_affine_block(7, 1, 1)  # k = v-1 boundary


@pytest.mark.parametrize(
    "pdi",
    [(37, 1, 4), (11, 1, 2), (19, 1, 2), (23, 1, 2)],
)
def test_one_dim_affine_prediction_matches_verifier(pdi):
    D, predicted = one_dim_affine_block(*pdi)
    assert verify_symmetric(dev(D)) == predicted


def test_pg_design_examples():
    assert verify_symmetric(pg_design(3, 2)).as_tuple() == (15, 7, 3)
    assert verify_symmetric(pg_design(2, 2)).as_tuple() == (7, 3, 1)
    assert verify_symmetric(pg_design(2, 3)).as_tuple() == (13, 4, 1)


@pytest.mark.parametrize("nq", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (2, 5)])
def test_pg_design_parameter_formula(nq):
    n, q = nq
    v = (q ** (n + 1) - 1) // (q - 1)
    k = (q**n - 1) // (q - 1)
    lam = (q ** (n - 1) - 1) // (q - 1)
    assert verify_symmetric(pg_design(n, q)).as_tuple() == (v, k, lam)


def test_complement_design():
    fano = dev(FANO_D)
    assert verify_symmetric(complement_design(fano)).as_tuple() == (7, 4, 2)
    assert verify_symmetric(complement_design(dev(paley(11)))).as_tuple() == (11, 6, 3)
    pg = pg_design(3, 2)
    assert complement_design(complement_design(pg)) == pg


def test_difference_set_search():
    D = difference_set_search(Zn(7), 3, 1)
    assert D is not None and designs.is_difference_set(D) == 1
    # first hit in canonical order is no later than {1,2,4}
    assert sorted(D.elements) <= [1, 2, 4]
    G = AbelianGroup([2, 2, 2, 2])
    D16 = difference_set_search(G, 6, 2)
    assert verify_symmetric(dev(D16)).as_tuple() == (16, 6, 2)
    with pytest.raises(ValueError):
        difference_set_search(Zn(13), 5, 2)  # 5*4 != 2*12


def test_dev_translation_invariance():
    D = paley(11)
    G = D.group
    for x in [1, 4, 7]:
        Dx = DifferenceSet(G, frozenset(G.add(d, x) for d in D.elements))
        assert dev(Dx) == dev(D)


def _abelian_groups_upto(n_max):
    # all invariant-factor chains with product <= n_max
    out = []
    def rec(prefix, prod, start):
        for f in range(start, n_max + 1):
            if prod * f > n_max:
                break
            if prefix and f % prefix[-1] != 0:
                continue
            chain = prefix + [f]
            out.append(chain)
            rec(chain, prod * f, f)
    rec([], 1, 2)
    return [c for c in out if 4 <= __import__("math").prod(c)]


def test_dev_soundness_small_groups():
    # every difference set found by exhaustive search develops to a symmetric design
    import math

    found = 0
    for factors in _abelian_groups_upto(21):
        G = AbelianGroup(factors)
        v = G.order
        for k in range(2, v - 1):
            num = k * (k - 1)
            if num % (v - 1) != 0:
                continue
            lam = num // (v - 1)
            D = difference_set_search(G, k, lam)
            if D is None:
                continue
            found += 1
            assert verify_symmetric(dev(D)).as_tuple() == (v, k, lam)
    assert found >= 5  # Fano, biplane, Paley(11), complements, ...


def test_design_file_roundtrip(tmp_path):
    S = dev(paley(11))
    path = tmp_path / "paley11.design"
    designs.write_design_file(path, S)
    S2 = designs.read_design_file(path)
    assert S2 == S
    text = path.read_text()
    assert text.splitlines()[0] == "11 5 2"
    assert text.endswith("\n")


def test_read_design_file_comments(tmp_path):
    path = tmp_path / "f.design"
    path.write_text("# comment\n7 3 ?\n0 1 2\n")
    S = designs.read_design_file(path)
    assert S.v == 7 and S.blocks == ((0, 1, 2),)


def test_abelian_group_encoding():
    G = AbelianGroup([2, 4])
    assert G.order == 8 and G.exponent == 4
    for a in range(8):
        assert G.encode(G.digits(a)) == a
    assert G.add(1, 1) == 0  # first digit has order 2
    with pytest.raises(ValueError):
        AbelianGroup([4, 2])  # not a divisibility chain

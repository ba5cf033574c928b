import pytest

import bes


def test_hypergraph_basics():
    F = bes.Hypergraph(3, 4, [[1, 2, 3], [2, 3, 0]])
    assert F.edges == [[0, 2, 3], [1, 2, 3]]
    assert len(F) == 2
    assert bes.span(F, [0, 1]) == 4
    assert bes.t_shadow(F, 2) == [[0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    assert bes.cover_histogram(F, 2) == {0: 1, 1: 4, 2: 1}
    assert bes.Hypergraph.parse(F.serialize()) == F


def test_errors_carry_codes():
    with pytest.raises(bes.BesError) as info:
        bes.Hypergraph(3, 4, [[1, 2, 3], [3, 2, 1]])
    assert info.value.args[0] == "DuplicateEdge"
    with pytest.raises(bes.BesError):
        bes.Params(3, 3, 2)


def test_configurations():
    F = bes.Hypergraph(3, 4, [[0, 1, 2], [1, 2, 3]])
    S = bes.find_configuration(F, ell=2, s_max=4)
    assert S.edge_indices == [0, 1] and S.span == 4
    assert not bes.is_free(F, bes.Params(3, 2, 2), 2)
    assert bes.is_free(F, bes.Params(3, 2, 2), 2, minus=True)
    assert len(bes.supporting_J(F, bes.Params(3, 2, 5))) == 6


def test_clean():
    F = bes.Hypergraph(4, 5, [[0, 1, 2, 3], [0, 1, 2, 4]])
    p = bes.Params(4, 2, 3)
    assert bes.verify_cleaned(F, p)[0] == "P1"
    cleaned, removed = bes.clean(F, p)
    assert len(cleaned) == 0 and removed == 2


def test_bounds():
    assert bes.pi_known(3, 2, 4) == ("7/36", "proven-exact", "gjkklp")
    assert bes.pi_known(3, 2, 6) is None
    assert bes.r_threshold_even(4, 2) == 14
    assert bes.check_claim_calc(14, 2, 4)


def test_solver():
    res = bes.exact_f(bes.Params(3, 2, 2), 7)
    assert res["optimum"] == 7 and res["complete"]
    assert bes.verify_witness(res["witness"], bes.Params(3, 2, 2))
    packed = bes.greedy_pack(bes.Params(3, 2, 2), 9, seed=3)
    assert packed == bes.greedy_pack(bes.Params(3, 2, 2), 9, seed=3)

from fractions import Fraction as F

import pytest

from harmgraphs.graphs import (
    GraphKind,
    KINGMAN,
    SCHUR,
    YOUNG,
    covers_down,
    covers_up,
    dim,
    dim_closed_form,
    dims_csv,
    edge_multiplicity,
    jack,
    jack_multiplicity_poly,
    level,
    parse_kind,
)
from harmgraphs.partitions import Partition, partitions_of
from harmgraphs.series import poly_eval

P = Partition


def test_kind_construction():
    assert parse_kind("young") is YOUNG
    assert parse_kind("jack(1/2)").theta == F(1, 2)
    assert str(jack(F(1, 3))) == "jack(1/3)"
    with pytest.raises(ValueError):
        GraphKind("jack")
    with pytest.raises(ValueError):
        GraphKind("jack", F(-1))
    with pytest.raises(ValueError):
        GraphKind("young", F(1))


def test_covers_by_kind():
    assert covers_up(P(), SCHUR) == [P([1])]
    assert covers_up(P([1]), YOUNG) == [P([2]), P([1, 1])]
    assert covers_up(P([1]), SCHUR) == [P([2])]
    assert covers_down(P([2, 1]), YOUNG) == [P([2]), P([1, 1])]
    assert covers_down(P([2]), SCHUR) == [P([1])]
    with pytest.raises(ValueError):
        covers_up(P([2, 2]), SCHUR)


def test_level_enumeration():
    assert len(level(4, YOUNG)) == 5
    assert [p.parts for p in level(4, SCHUR)] == [(4,), (3, 1)]
    assert level(0, KINGMAN) == [P()]
    assert [p.parts for p in level(4, YOUNG, max_length=2)] == [(4,), (3, 1), (2, 2)]


def test_edge_multiplicity_examples():
    theta = F(1, 5)
    assert edge_multiplicity(P([1]), P([2]), jack(theta)) == 1
    assert edge_multiplicity(P([1]), P([1, 1]), jack(theta)) == 2 / (1 + theta)
    assert edge_multiplicity(P([1]), P([1, 1]), KINGMAN) == 2
    assert edge_multiplicity(P([2, 1]), P([2, 2]), KINGMAN) == 2
    assert edge_multiplicity(P([3]), P([3, 1]), YOUNG) == 1
    with pytest.raises(ValueError):
        edge_multiplicity(P([1]), P([3]), YOUNG)


def test_jack_multiplicities_at_one_are_unit():
    one = jack(F(1))
    for n in range(7):
        for mu in partitions_of(n):
            for lam in covers_up(mu, one):
                assert edge_multiplicity(mu, lam, one) == 1


def test_jack_degenerates_to_kingman_at_zero():
    # substitute theta = 0 into the reduced rational function of theta
    for n in range(9):
        for mu in partitions_of(n):
            for lam in covers_up(mu, YOUNG):
                num, den = jack_multiplicity_poly(mu, lam)
                assert poly_eval(den, 0) != 0
                limit = poly_eval(num, 0) / poly_eval(den, 0)
                assert limit == edge_multiplicity(mu, lam, KINGMAN)


def test_jack_poly_matches_direct_evaluation():
    theta = F(3, 7)
    kind = jack(theta)
    for n in range(6):
        for mu in partitions_of(n):
            for lam in covers_up(mu, kind):
                num, den = jack_multiplicity_poly(mu, lam)
                assert poly_eval(num, theta) / poly_eval(den, theta) == edge_multiplicity(
                    mu, lam, kind
                )


def test_dim_examples():
    assert dim(P(), P([2, 1]), YOUNG) == 2
    assert dim(P(), P([2, 1]), KINGMAN) == 3
    assert dim(P(), P([2, 1]), SCHUR) == 1
    assert dim(P([1]), P([1]), YOUNG) == 1
    assert dim(P([2]), P([1, 1]), YOUNG) == 0


def test_dim_closed_form_examples():
    assert dim_closed_form(P([2, 2]), YOUNG) == 2
    assert dim_closed_form(P([1, 1, 1]), KINGMAN) == 6
    assert dim_closed_form(P([3, 2, 1]), SCHUR) == 2
    with pytest.raises(ValueError):
        dim_closed_form(P([2]), jack(F(1, 2)))


def test_dimension_oracles_small():
    for n in range(10):
        for lam in partitions_of(n):
            assert dim(P(), lam, YOUNG) == dim_closed_form(lam, YOUNG)
            assert dim(P(), lam, KINGMAN) == dim_closed_form(lam, KINGMAN)
    for n in range(13):
        for lam in partitions_of(n, strict=True):
            assert dim(P(), lam, SCHUR) == dim_closed_form(lam, SCHUR)


@pytest.mark.parametrize("kind", [YOUNG, KINGMAN, SCHUR, jack(F(2, 3))])
def test_branching_consistency(kind):
    # dim(mu, lam) = sum over nu covering mu of kappa(mu, nu) dim(nu, lam)
    for n_mu in range(4):
        for mu in partitions_of(n_mu, strict=kind.strict):
            for n_lam in range(n_mu + 1, 9):
                for lam in partitions_of(n_lam, strict=kind.strict):
                    lhs = dim(mu, lam, kind)
                    rhs = sum(
                        (
                            edge_multiplicity(mu, nu, kind) * dim(nu, lam, kind)
                            for nu in covers_up(mu, kind)
                        ),
                        F(0),
                    )
                    assert lhs == rhs, (mu, lam)


def test_dims_csv_format():
    text = dims_csv(3, YOUNG)
    lines = text.strip().splitlines()
    assert lines[0] == "level,partition,dim"
    assert lines[1] == "3,3,1"
    assert lines[2] == "3,2+1,2"
    assert lines[3] == "3,1+1+1,1"

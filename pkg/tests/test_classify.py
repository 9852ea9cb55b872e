import pytest

from commlat import corpus
from commlat.classify import (
    analyze,
    forces_abelian_type,
    forces_nilpotent_type,
    forces_solvable_type,
    supernilpotency_shape,
)
from commlat.commutator import largest_commutator, series
from commlat.errors import NotModular


def test_m3_forces_everything(m3):
    assert forces_solvable_type(m3)
    assert forces_nilpotent_type(m3)
    assert forces_abelian_type(m3)
    assert supernilpotency_shape(m3)


def test_b2_forces_nothing(b2):
    assert not forces_solvable_type(b2)
    assert not supernilpotency_shape(b2)


def test_chain_forces_nothing(chain3):
    assert not forces_solvable_type(chain3)
    assert not forces_nilpotent_type(chain3)
    assert not forces_abelian_type(chain3)
    assert not supernilpotency_shape(chain3)


def test_b22_verdicts(b22):
    assert not forces_solvable_type(b22)
    assert not forces_nilpotent_type(b22)
    assert not forces_abelian_type(b22)
    assert not supernilpotency_shape(b22)


def test_one_element_forces_everything():
    one = corpus.chain(1)
    report = analyze(one)
    assert report.forces_solvable_type
    assert report.forces_nilpotent_type
    assert report.forces_abelian_type
    assert report.supernilpotency_shape


def test_boolean_cube_verdicts():
    cube = corpus.boolean(3)
    report = analyze(cube)
    assert not report.forces_solvable_type
    assert not report.supernilpotency_shape


def test_nonmodular_rejected(n5):
    with pytest.raises(NotModular):
        analyze(n5)
    with pytest.raises(NotModular):
        forces_solvable_type(n5)
    assert not supernilpotency_shape(n5)  # shape check has no modularity gate


def test_analyze_report_fields(m3):
    report = analyze(m3)
    assert report.n == 5
    assert report.modular
    assert report.largest_top_square == 0
    assert report.solvable_obstruction is None
    assert report.abelian_sufficient_condition == (0, 1, 2, 3, 4)
    assert report.splitting_pairs == ()
    assert all(g == m3.top for (_, _, g) in report.cover_ceilings)
    doc = report.to_doc()
    assert doc["forces_abelian_type"] is True
    assert doc["abelian_sufficient_condition"] == [0, 1, 2, 3, 4]
    assert "yes" in report.summary()


def test_analyze_b22_witnesses(b22):
    report = analyze(b22)
    assert report.solvable_obstruction == (0, 0, 1, 1)
    assert report.largest_top_square == b22.top
    assert report.abelian_sufficient_condition is None
    assert set(report.splitting_pairs) == {(1, 2), (2, 1)}


def test_nesting_on_corpus(modular6):
    for lat in modular6:
        report = analyze(lat)
        if report.forces_abelian_type:
            assert report.forces_nilpotent_type
        if report.forces_nilpotent_type:
            assert report.forces_solvable_type


def test_verdicts_match_largest_series(modular6):
    for lat in modular6:
        rep = series(largest_commutator(lat))
        assert forces_solvable_type(lat) == rep.is_solvable
        assert forces_nilpotent_type(lat) == rep.is_nilpotent
        assert forces_abelian_type(lat) == rep.is_abelian


def test_abelian_witness_is_genuine(modular6):
    from commlat.lattice import SublatticeEmbedding, is_complemented, is_simple

    for lat in modular6:
        report = analyze(lat)
        witness = report.abelian_sufficient_condition
        if witness is None:
            continue
        sub = SublatticeEmbedding(lat, witness)
        assert sub.is_zero_one
        own, _ = sub.as_lattice()
        assert own.n >= 3
        assert own.is_modular() and is_simple(own) and is_complemented(own)
        assert report.forces_abelian_type


def test_supernilpotency_matches_splitting(all6):
    from commlat.projectivity import splits

    for lat in all6:
        assert supernilpotency_shape(lat) == (not splits(lat))

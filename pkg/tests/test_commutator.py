import itertools

import pytest

from commlat import corpus
from commlat.commutator import (
    CommutatorTable,
    construct_pullback,
    construct_splitting,
    construct_sublattice,
    enumerate_commutators,
    largest_commutator,
    largest_residuation_at_cover,
    meet_table,
    residuation,
    series,
    validate,
    zero_table,
)
from commlat.errors import (
    CongruenceMissingSeed,
    InvalidTable,
    LatticeTooLarge,
    NotAHomomorphism,
    NotASplittingPair,
    NotModular,
)
from commlat.lattice import (
    LatticeMap,
    LatticePartition,
    SublatticeEmbedding,
    congruence_generated,
    quotient,
)
from commlat.projectivity import PrimeInterval, SplittingPair


# -- validation ---------------------------------------------------------------


def test_zero_table_is_valid(all5):
    for lat in all5:
        assert zero_table(lat).is_valid


def test_meet_table_on_b2_valid(b2):
    assert meet_table(b2).is_valid


def test_meet_table_on_m3_invalid(m3):
    violations = validate(meet_table(m3))
    assert violations
    assert violations[0].law == "join-distributivity"
    assert violations[0].witness == (1, 2, 3)  # (a v b) ^ c = c but 0 v 0 = 0


def test_validation_witnesses():
    lat = corpus.b2()
    asym = CommutatorTable(lat, [[0, 0], [1, 1]])
    laws = {v.law for v in asym.violations()}
    assert "symmetry" in laws
    too_big = CommutatorTable(lat, [[0, 1], [1, 1]])
    assert any(v.law == "boundedness" for v in too_big.violations())
    bad_zero = CommutatorTable(corpus.chain(3), [[0, 0, 1], [0, 0, 1], [1, 1, 2]])
    assert any(v.law == "bottom-annihilation" for v in bad_zero.violations())


# -- residuation and series ----------------------------------------------------


def test_residuation_examples(b2, m3):
    mt = meet_table(b2)
    assert residuation(mt, 0, 1) == 0
    for lat, table in ((b2, mt), (m3, zero_table(m3))):
        for x in lat.elements:
            assert residuation(table, x, x) == lat.top
    zt = zero_table(m3)
    assert all(residuation(zt, x, y) == m3.top
               for x in m3.elements for y in m3.elements)


def test_residuation_requires_valid_table(m3):
    with pytest.raises(InvalidTable):
        residuation(meet_table(m3), 0, 1)


def test_series_zero_table_is_abelian(m3):
    assert series(zero_table(m3)).kind == "abelian"


def test_series_meet_on_b2_is_none(b2):
    report = series(meet_table(b2))
    assert report.kind == "none"
    assert report.derived == (1, 1)


def test_series_one_element_lattice():
    one = corpus.chain(1)
    assert series(zero_table(one)).kind == "abelian"


def test_series_of_splitting_table_on_b22(b22):
    # the splitting table with delta=1, epsilon=2 fixes 2 = [2,2] = [top,2],
    # so both series stabilize at 2 and no type applies
    theta = congruence_generated(b22, [(2, 3)])
    table = construct_splitting(b22, SplittingPair(1, 2), theta)
    assert table.entries == ((0, 0, 0, 0), (0, 0, 0, 0),
                             (0, 0, 2, 2), (0, 0, 2, 2))
    report = series(table)
    assert report.derived == (3, 2, 2)
    assert report.lower_central == (3, 2, 2)
    assert report.kind == "none"


def test_no_table_on_b22_is_solvable_but_not_nilpotent(b22):
    # on this lattice every multiplication is abelian or of no type at all
    kinds = {series(t).kind for t in enumerate_commutators(b22)}
    assert kinds == {"abelian", "none"}


def test_series_nesting(all5):
    for lat in all5:
        for table in enumerate_commutators(lat):
            report = series(table)
            if report.is_abelian:
                assert report.is_nilpotent
            if report.is_nilpotent:
                assert report.is_solvable


def test_series_decrease_and_stabilize(all5):
    for lat in all5:
        for table in enumerate_commutators(lat):
            report = series(table)
            for seq in (report.derived, report.lower_central):
                assert len(seq) <= lat.n + 1
                assert seq[-1] == seq[-2]
                for prev, cur in zip(seq, seq[1:]):
                    assert lat.leq(cur, prev)


# -- constructions ------------------------------------------------------------


def test_construct_sublattice_whole_lattice(m3):
    table = zero_table(m3)
    whole = SublatticeEmbedding(m3, range(5))
    assert construct_sublattice(table, whole).entries == table.entries


def test_construct_sublattice_m3_chain(m3):
    sub = SublatticeEmbedding(m3, [0, 1, 4])
    out = construct_sublattice(zero_table(m3), sub)
    assert out.entries == zero_table(corpus.chain(3)).entries


def test_construct_pullback_identity(b2):
    table = meet_table(b2)
    out = construct_pullback(b2, LatticeMap.identity(b2), table)
    assert out.entries == table.entries


def test_construct_pullback_zero_target(chain3, b2):
    hom = LatticeMap(chain3, b2, (0, 1, 1))
    out = construct_pullback(chain3, hom, zero_table(b2))
    assert out.entries == zero_table(chain3).entries


def test_construct_pullback_chain_onto_b2(chain3, b2):
    hom = LatticeMap(chain3, b2, (0, 1, 1))
    out = construct_pullback(chain3, hom, meet_table(b2))
    assert out.entries == ((0, 0, 0), (0, 1, 1), (0, 1, 1))


def test_construct_pullback_needs_01_map(chain3, b2):
    collapse = LatticeMap(chain3, b2, (0, 0, 0))
    with pytest.raises(NotAHomomorphism):
        construct_pullback(chain3, collapse, meet_table(b2))


def test_construct_splitting_examples(b22, b2):
    theta = congruence_generated(b22, [(2, 3)])
    table = construct_splitting(b22, SplittingPair(1, 2), theta)
    # s sends 0,1 to 0 and 2,3 to 2
    assert table.value(1, 1) == 0
    assert table.value(3, 3) == 2
    assert table.value(2, 3) == 2
    assert table.value(1, 3) == 0
    assert table.value(1, 2) == 0

    all_one = LatticePartition.single_block(b22)
    assert construct_splitting(b22, SplittingPair(1, 2), all_one).entries == \
        zero_table(b22).entries

    identity = LatticePartition.identity(b2)
    out = construct_splitting(b2, SplittingPair(0, 1), identity)
    assert out.entries == meet_table(b2).entries


def test_construct_splitting_errors(m3, b22):
    identity = LatticePartition.identity(m3)
    with pytest.raises(NotASplittingPair):
        construct_splitting(m3, SplittingPair(1, 2), identity)
    with pytest.raises(CongruenceMissingSeed):
        construct_splitting(b22, SplittingPair(1, 2),
                            LatticePartition.identity(b22))


def test_constructions_always_validate(all5):
    for lat in all5:
        big = largest_commutator(lat)
        whole = SublatticeEmbedding(lat, lat.elements)
        assert construct_sublattice(big, whole).is_valid
        image, proj = quotient(lat, LatticePartition.single_block(lat))
        assert construct_pullback(lat, proj, largest_commutator(image)).is_valid


# -- enumeration and the largest multiplication --------------------------------


def test_enumerate_b2(b2):
    tables = enumerate_commutators(b2)
    assert [t.entries for t in tables] == [((0, 0), (0, 0)), ((0, 0), (0, 1))]


def test_enumerate_m3_only_zero(m3):
    tables = enumerate_commutators(m3)
    assert len(tables) == 1
    assert tables[0] == zero_table(m3)


def test_enumerate_one_element():
    one = corpus.chain(1)
    assert len(enumerate_commutators(one)) == 1


def test_enumerate_cap(b2):
    assert len(enumerate_commutators(b2, cap=1)) == 1


def test_enumerate_size_guard():
    with pytest.raises(LatticeTooLarge):
        enumerate_commutators(corpus.chain(6))


def _brute_force_tables(lat):
    cells = [(x, y) for x in lat.elements for y in lat.elements if x <= y]
    choices = []
    for x, y in cells:
        mask = lat.lower_set(lat.meet(x, y))
        choices.append([z for z in lat.elements if mask >> z & 1])
    out = set()
    for combo in itertools.product(*choices):
        entries = [[0] * lat.n for _ in range(lat.n)]
        for (x, y), v in zip(cells, combo):
            entries[x][y] = entries[y][x] = v
        table = CommutatorTable(lat, entries)
        if table.is_valid:
            out.add(table.entries)
    return out


def test_enumeration_matches_full_brute_force(all5):
    # independent oracle: try every symmetric bounded table outright
    small = [lat for lat in all5 if lat.n <= 4]
    small += [corpus.diamond(), corpus.pentagon(), corpus.chain(5)]
    for lat in small:
        assert {t.entries for t in enumerate_commutators(lat)} == \
            _brute_force_tables(lat)


def test_known_table_counts():
    counts = {3: 7, 4: 42, 5: 429}
    for k, expected in counts.items():
        assert len(enumerate_commutators(corpus.chain(k))) == expected
    assert len(enumerate_commutators(corpus.boolean(2))) == 4
    assert len(enumerate_commutators(corpus.pentagon())) == 4


def test_largest_commutator_examples(m3, b2, b22):
    assert largest_commutator(m3) == zero_table(m3)
    assert largest_commutator(b2) == meet_table(b2)
    assert largest_commutator(b22) == meet_table(b22)
    assert largest_commutator(corpus.chain(4)) == meet_table(corpus.chain(4))


def test_largest_is_pointwise_join_of_all(all5):
    for lat in all5:
        tables = enumerate_commutators(lat)
        top_entries = [
            [lat.join_all(t.value(x, y) for t in tables) for y in lat.elements]
            for x in lat.elements
        ]
        assert tuple(map(tuple, top_entries)) == largest_commutator(lat).entries


def test_largest_dominates_every_table(all5):
    for lat in all5:
        big = largest_commutator(lat)
        for table in enumerate_commutators(lat):
            for x in lat.elements:
                for y in lat.elements:
                    assert lat.leq(table.value(x, y), big.value(x, y))


def test_largest_grows_on_sublattices(all7):
    # restricting to a (0,1)-sublattice can only enlarge the largest table
    for lat in all7:
        big = largest_commutator(lat)
        inner = [x for x in lat.elements if x not in (lat.bottom, lat.top)]
        for mask in range(1 << len(inner)):
            members = {lat.bottom, lat.top}
            members.update(x for i, x in enumerate(inner) if mask >> i & 1)
            if not all(lat.meet(x, y) in members and lat.join(x, y) in members
                       for x in members for y in members):
                continue
            own, embed = SublatticeEmbedding(lat, members).as_lattice()
            sub_big = largest_commutator(own)
            for i, x in enumerate(embed):
                for j, y in enumerate(embed):
                    assert lat.leq(big.value(x, y), embed[sub_big.value(i, j)])


def test_largest_shrinks_along_quotients(all7):
    # the image of the largest table dominates the image lattice's largest
    from commlat.lattice import all_congruences

    for lat in all7:
        big = largest_commutator(lat)
        for theta in all_congruences(lat):
            image, proj = quotient(lat, theta)
            img_big = largest_commutator(image)
            for x in lat.elements:
                for y in lat.elements:
                    assert image.leq(img_big.value(proj(x), proj(y)),
                                     proj(big.value(x, y)))


def test_largest_residuation_at_cover_examples(m3, b22, chain3):
    assert largest_residuation_at_cover(m3, PrimeInterval(0, 1)) == 4
    assert largest_residuation_at_cover(b22, PrimeInterval(0, 1)) == 2
    assert largest_residuation_at_cover(chain3, PrimeInterval(1, 2)) == 1


def test_largest_residuation_requires_modular(n5):
    with pytest.raises(NotModular):
        largest_residuation_at_cover(n5, PrimeInterval(0, 1))

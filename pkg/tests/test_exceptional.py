import numpy as np
import pytest

from eminent.chevalley import chevalley_algebra
from eminent.exceptional import (
    DATA_FILE, ElementData, ExceptionalError, InvariantProfile,
    RepresentativeEntry, centralizer, classify, database_entries,
    database_lines, eminent_list, invariant_profile, levi_classes,
    levi_regular_representative, load_database, normalize_label, overgroups,
    profile_ties, recognize, write_database,
)
from eminent.roots import build_root_system
from eminent.tables import profile_fields
from eminent.verify import exceptional_checks

rng = np.random.default_rng(5)


def _simple(name, nodes):
    rs = build_root_system(name[0], int(name[1:]))
    return [rs.simple[i - 1] for i in nodes]


def test_levi_counts():
    counts = {n: len(levi_classes(n)) for n in ("G2", "F4", "E6", "E7", "E8")}
    assert counts == {"G2": 4, "F4": 12, "E6": 17, "E7": 32, "E8": 41}


def test_e7_duplicate_labels():
    labels = [c.label for c in levi_classes("E7")]
    for x in ("(A1^3)", "(A3A1)", "(A5)"):
        assert f"{x}^(1)" in labels and f"{x}^(2)" in labels
    assert len(set(labels)) == len(labels)


def test_levi_regular_examples():
    e = levi_regular_representative("E7", "E6")
    assert e.support == tuple(_simple("E7", range(1, 7)))
    e = levi_regular_representative("E6", "D4")
    assert e.support == tuple(_simple("E6", [2, 3, 4, 5]))
    e = levi_regular_representative("E7", "A6")
    assert e.support == tuple(_simple("E7", [1, 3, 4, 5, 6, 7]))
    with pytest.raises(ExceptionalError):
        levi_regular_representative("E6", "E7")


def test_normalize_label():
    assert normalize_label("D_4(a_1)A_1") == "D4(a1)A1"
    assert normalize_label(r"\tilde{A}_1") == "A~1"
    assert normalize_label("(A_7)_3") == "(A7)_3"


def test_centralizer_of_zero():
    alg = chevalley_algebra("G", 2, 3)
    z = np.zeros((alg.dim, alg.dim), dtype=np.int64)
    assert centralizer(alg, z).dim == alg.dim
    u = np.eye(alg.dim, dtype=np.int64)
    assert centralizer(alg, u, "unipotent").dim == alg.dim


def test_g2_regular_minimal_module():
    rs = build_root_system("G", 2)
    for p in (7, 11):
        prof = invariant_profile("G2", p, "nilpotent", rs.simple)
        assert prof.jbs_min == (7,)
        assert list(prof.present()) == ["jbs_min"]


def test_profile_fields_examples():
    assert profile_fields("E6", "nilpotent", 3) == ["jbs_adj", "alg"]
    assert profile_fields("F4", "unipotent", 2) == ["jbs_min", "jbs_adj"]


def test_e6_regular_alg_both_lattices():
    rs = build_root_system("E", 6)
    assert ElementData("E6", 3, "nilpotent", rs.simple, "sc").value("alg") == 31
    assert ElementData("E6", 3, "nilpotent", rs.simple, "ad").value("alg") == 24


def test_e7_levi_ds():
    e = ElementData("E7", 3, "nilpotent", _simple("E7", range(1, 7)))
    assert e.value("ds") == (15, 12, 9)
    e = ElementData("E7", 3, "nilpotent", _simple("E7", [1, 3, 4, 5, 6, 7]))
    assert e.value("ds") == (19, 17)


def test_e6_p2_d4_ds():
    e = ElementData("E6", 2, "nilpotent", _simple("E6", [2, 3, 4, 5]))
    assert e.value("ds") == (20, 17, 16)


def test_aux_rows_small_types():
    got = exceptional_checks(["F4", "E6", "E7"])
    assert got
    assert [c.line() for c in got if not c.ok] == []


@pytest.mark.parametrize("name", ["G2", "F4", "E6"])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("kind", ["nilpotent", "unipotent"])
def test_injective_small(name, p, kind):
    assert profile_ties(name, p, kind) == []


def test_injective_e6_adjoint():
    for p in (2, 3):
        assert profile_ties("E6", p, "nilpotent", "ad") == []


@pytest.mark.parametrize("name,p", [("E6", 3), ("E7", 2)])
def test_jbs_adj_lattice_agreement(name, p):
    for e in database_entries(name, p, "nilpotent"):
        a = ElementData(name, p, "nilpotent", e.support, "sc")
        b = ElementData(name, p, "nilpotent", e.support, "ad")
        assert a.value("jbs_adj") == b.value("jbs_adj"), e.label


def test_sign_flips():
    names = ["G2", "F4", "E6", "E7"]
    for _ in range(20):
        name = names[rng.integers(len(names))]
        p = int(rng.choice([3, 5]))
        kind = str(rng.choice(["nilpotent", "unipotent"]))
        entries = [e for e in database_entries(name, p, kind) if e.support]
        e = entries[rng.integers(len(entries))]
        signs = rng.choice([-1, 1], len(e.support))
        flipped = [(r, int(s)) for r, s in zip(e.support, signs)]
        assert invariant_profile(name, p, kind, flipped) == \
            invariant_profile(name, p, kind, e.support), (name, e.label)


def test_recognize_levi_classes():
    for name in ("G2", "F4", "E6"):
        for kind in ("nilpotent", "unipotent"):
            for e in database_entries(name, 3, kind):
                assert classify(name, 3, kind, e.support).label == e.label


def test_recognize_f4_from_table():
    prof = InvariantProfile(jbs_min=(0,), jbs_adj=(0,), ds=(10, 5, 2, 0))
    r = recognize("F4", 2, "nilpotent", prof)
    assert r.status == "table" and r.label == "F4(a1)"


def test_recognize_e7_adjoint_d5():
    supp = _simple("E7", [2, 3, 4, 5, 6])
    r = classify("E7", 2, "nilpotent", supp, "ad")
    assert r.status == "unique" and r.label == "D5"
    assert ElementData("E7", 2, "nilpotent", supp, "ad").value("alg") == 42


def test_recognize_e8_regular():
    rs = build_root_system("E", 8)
    r = classify("E8", 2, "nilpotent", rs.simple)
    assert r.label == "E8"
    assert (r.profile.alg, r.profile.alg_prime) == (79, 74)


def test_recognize_errors():
    with pytest.raises(ExceptionalError):
        recognize("G2", 3, "nilpotent", InvariantProfile())
    fields = profile_fields("G2", "nilpotent", 3)
    bogus = InvariantProfile(**{f: (99,) for f in fields})
    with pytest.raises(ExceptionalError):
        recognize("G2", 3, "nilpotent", bogus)


def test_nil_ambiguity_reported():
    assert "nil" in profile_fields("E8", "nilpotent", 3)
    rs = build_root_system("E", 8)
    supp = tuple(rs.simple[:2])
    db = [RepresentativeEntry("E8", "X", "nilpotent", "any", supp),
          RepresentativeEntry("E8", "Y", "nilpotent", "any", supp)]
    fields = [f for f in profile_fields("E8", "nilpotent", 3) if f != "nil"]
    e = ElementData("E8", 3, "nilpotent", supp)
    prof = InvariantProfile(nil="unavailable",
                            **{f: e.value(f) for f in fields})
    r = recognize("E8", 3, "nilpotent", prof, database=db)
    assert r.status == "ambiguous"
    assert set(r.labels) == {"X", "Y"} and r.missing == ("nil",)
    assert r.label is None
    assert profile_ties("E8", 3, "nilpotent", database=db) == [["X", "Y"]]


def test_eminent_lists():
    assert eminent_list("G2", 3) == ["G2", "(A~1)_3"]
    assert eminent_list("E8", 3) == ["E8", "E8(a1)", "E8(a2)", "(A7)_3"]
    assert eminent_list("E6", 5) == ["E6", "E6(a1)"]


def test_overgroups():
    assert overgroups("G2", 2, "unipotent", "G2(a1)") == ["A2"]
    assert overgroups("F4", 3, "nilpotent", "F4(a3)") == ["B4", "A1C3"]
    assert overgroups("E8", 2, "nilpotent", "E8(b4)") == ["A1E7"]
    with pytest.raises(ExceptionalError):
        overgroups("G2", 2, "unipotent", "A1")


def test_database_shipped_matches_generator(tmp_path):
    body = [line for line in DATA_FILE.read_text().splitlines()
            if line and not line.startswith("#")]
    assert body == database_lines()
    assert len(load_database()) == len(body)
    path = tmp_path / "db.txt"
    write_database(path)
    assert load_database(path) == load_database()


def test_database_checksum(tmp_path):
    path = tmp_path / "db.txt"
    write_database(path)
    text = path.read_text().replace("|any|", "|p=2|", 1)
    path.write_text(text)
    with pytest.raises(ExceptionalError):
        load_database(path)


def test_database_independence(tmp_path):
    path = tmp_path / "db.txt"
    write_database(path, ["G2|X|nilpotent|any|10,10"])
    with pytest.raises(ExceptionalError):
        load_database(path)


def test_from_matrix_matches_support():
    rs = build_root_system("G", 2)
    e = ElementData("G2", 3, "nilpotent", rs.simple)
    m = ElementData.from_matrix("G2", 3, "nilpotent", e.adjoint)
    assert m.value("jbs_adj") == e.value("jbs_adj")
    assert m.centralizer.dim == e.centralizer.dim
    with pytest.raises(ExceptionalError):
        m.value("jbs_min")
    with pytest.raises(ExceptionalError):
        ElementData.from_matrix("G2", 3, "nilpotent", np.eye(3))


def test_bad_support():
    with pytest.raises(ExceptionalError):
        ElementData("G2", 3, "nilpotent", [(5, 5)])
    with pytest.raises(ExceptionalError):
        ElementData("G2", 3, "semisimple", [])

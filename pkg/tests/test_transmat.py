import json

import pytest

from nsymkit.compositions import compositions
from nsymkit.linalg import Matrix
from nsymkit.transmat import (
    NAMED,
    DegreeCapError,
    MatrixConfig,
    check_identities,
    cob_matrix,
    named_matrix,
)

import oracle

KNOWN_MISPRINTS = {"M(psi,For)", "M(h,phi)", "M(h,psi)", "M(e,phi)", "M(e,psi)", "M(r,phi)", "M(r,psi)"}


def test_fundamental_to_monomial_example():
    tm = cob_matrix("qsym", "F", "M", 2)
    assert tm.matrix.rows == [[1, 1], [0, 1]]
    assert tm[(2,), (1, 1)] == 1
    assert tm.to_csv() == ',[2],"[1,1]"\n[2],1,1\n"[1,1]",0,1\n'


def test_json_export():
    data = cob_matrix("nsym", "H", "R", 2).to_json()
    assert data["n"] == 2 and data["rows"] == [[2], [1, 1]] == data["cols"]
    assert data["entries"] == [["1", "0"], ["1", "1"]]
    json.dumps(data)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_j_psi_is_antidiagonal(n):
    J = named_matrix("J_psi", n).matrix
    size = 2 ** (n - 1)
    assert J.rows == [[int(i + j == size - 1) for j in range(size)] for i in range(size)]


def test_trivial_named_matrices():
    assert named_matrix("K", 1).matrix.rows == [[1]]
    assert named_matrix("z", 3).matrix == Matrix.diagonal([3, 2, 2, 6])


def test_kostka_like_matrix_is_refinement_incidence():
    K = named_matrix("K", 3).matrix
    assert K == cob_matrix("qsym", "F", "M", 3).matrix


@pytest.mark.parametrize("name", NAMED)
def test_every_named_matrix_builds(name):
    assert named_matrix(name, 3).matrix.shape == (4, 4)


def test_unknown_names():
    with pytest.raises((KeyError, ValueError)):
        named_matrix("Q", 2)
    with pytest.raises(ValueError):
        cob_matrix("lambda", "M", "F", 2)


def test_degree_cap(monkeypatch):
    with pytest.raises(DegreeCapError):
        cob_matrix("nsym", "R", "H", 4, MatrixConfig(max_degree=3))
    monkeypatch.setenv("NSYMKIT_MAX_DEGREE", "5")
    assert MatrixConfig.from_env().max_degree == 5


@pytest.mark.parametrize("n", [3, 4])
def test_matrices_match_oracle(n):
    assert cob_matrix("nsym", "E", "Psi", n).matrix.rows == oracle.nsym_matrix("e", "psi", n)
    assert cob_matrix("qsym", "Phi", "For", n).matrix.rows == oracle.qsym_matrix("Phi", "For", n)


@pytest.mark.parametrize("n", range(1, 7))
def test_identities_hold(n):
    rep = check_identities(n)
    assert rep.passed, [r.line() for r in rep.failures()]
    assert all(r.passed for r in rep.results if r.status == "corrected")


@pytest.mark.parametrize("n", [3, 4, 6])
def test_refuted_misprints_are_the_known_ones(n):
    assert {r.name for r in check_identities(n).misprints_refuted()} == KNOWN_MISPRINTS


def test_misprint_lines_show_the_offending_entry():
    rep = check_identities(3)
    bad = next(r for r in rep.misprints_refuted() if r.name == "M(h,psi)")
    assert bad.line().startswith("FAIL M(h,psi): M(h,psi) = z^-1 L_psi^t [misprint]  first mismatch at")
    assert bad.offending[:2] == ((3,), (1, 2))


def test_index_is_canonical_order():
    assert cob_matrix("nsym", "R", "R", 4).index == compositions(4)

import pytest

from sqrtcoulomb.quantum import (CouplingSign, PhysicalParams, QuantumNumbers, hydrogen_states,
                                 twice, two_j_of)


class TestHalfIntegers:
    def test_twice(self):
        assert twice(1.5) == 3
        assert twice(2) == 4
        with pytest.raises(ValueError):
            twice(0.3)
        with pytest.raises(ValueError):
            twice(True)

    @pytest.mark.parametrize("j", [0, 1, -0.5, 2.0])
    def test_two_j_rejects(self, j):
        with pytest.raises(ValueError):
            two_j_of(j)


class TestCouplingSign:
    @pytest.mark.parametrize("text,expected", [("+", CouplingSign.PLUS), ("plus", CouplingSign.PLUS),
                                               ("-1", CouplingSign.MINUS), ("MINUS", CouplingSign.MINUS)])
    def test_parse(self, text, expected):
        assert CouplingSign.parse(text) is expected

    def test_parse_rejects(self):
        with pytest.raises(ValueError):
            CouplingSign.parse("0")


class TestQuantumNumbers:
    def test_defaults_to_stretched_m(self):
        qn = QuantumNumbers.of(2, 1, 1.5)
        assert qn.m == 1.5 and qn.branch == 0 and qn.n_r == 0

    def test_upper_branch(self):
        assert QuantumNumbers.of(2, 1, 0.5).branch == 1

    @pytest.mark.parametrize("args", [(0, 0, 0.5), (1, 1, 1.5), (2, 1, 2.5), (2, 0, 1.5), (1, 0, 0.5, 1.5),
                                      (1, 0, 0.5, 0.0)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            QuantumNumbers.of(*args)

    def test_rejects_floats(self):
        with pytest.raises(ValueError):
            QuantumNumbers(1.0, 0, 1)

    def test_state_list(self):
        states = hydrogen_states(3)
        assert len(states) == 9
        assert [(s.n, s.l, s.two_j) for s in states[:4]] == [(1, 0, 1), (2, 0, 1), (2, 1, 1), (2, 1, 3)]


class TestPhysicalParams:
    def test_bohr_radius(self):
        assert PhysicalParams(1.0, 0.5).a0 == 2.0

    @pytest.mark.parametrize("m,alpha", [(0, 0.1), (-1, 0.1), (1, 0), (1, 1.0), (float("inf"), 0.1)])
    def test_invalid(self, m, alpha):
        with pytest.raises(ValueError):
            PhysicalParams(m, alpha)

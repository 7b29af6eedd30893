"""Circuit language: parsing, printing, structure, and level permutations."""

from fractions import Fraction

import pytest

from conftest import CT_KINDS, random_word
from qutrit_exact.circuit.core import (
    Circuit,
    Op,
    adjoint,
    compose,
    op_text,
    print_circuit,
    tensor,
)
from qutrit_exact.circuit.parse import parse_circuit
from qutrit_exact.circuit.perm import Permutation, TAU_LABELS, perm_compose
from qutrit_exact.errors import ParseError
from qutrit_exact.sim.gates import circuit_matrix, gate_matrix
from qutrit_exact.sim.matrix import UnitaryMatrix, equal_exact


class TestParsing:
    def test_full_gate_inventory(self):
        text = """
        # every base form on two qutrits
        qutrits 2
        X 0
        Z 1
        S 0
        SDG 1
        H 0
        HDG 1
        T 0
        TDG 1
        R 0
        TAU(12) 1
        TAU(021) 0
        ZPHASE 1/3 -1/3 0
        XPHASE 2 1 1
        CX 0 1
        C2[X 1] 0
        C2[SDG 1] 0 phase=zeta
        C2[HDG 1] 0 phase=-1
        LAMBDA[TAU(12) 1] 0
        """
        circ = parse_circuit(text)
        assert circ.n == 2
        assert len(circ.ops) == 18
        # phase exponents live modulo 3: -1/3 normalizes to 8/3
        assert circ.ops[11].params == (Fraction(1, 3), Fraction(8, 3))
        assert circ.ops[14].inner.kind == "X"
        assert circ.ops[15].phase == (1, 1)
        assert circ.ops[16].phase == (-1, 0)
        assert circ.ops[17].kind == "LAMBDA"

    def test_gate_names_are_case_insensitive(self):
        circ = parse_circuit("qutrits 1\nh 0\nsdg 0\n")
        assert tuple(op.kind for op in circ.ops) == ("H", "SDG")

    def test_comments_and_blank_lines(self):
        circ = parse_circuit("# top\n\nqutrits 1\nH 0  # inline\n\n")
        assert len(circ.ops) == 1

    def test_print_parse_roundtrip(self, rng):
        circ = random_word(rng, CT_KINDS, 2, 30)
        extra = (
            Op("C2", (0,), inner=Op("TAU", (1,), ("12",)), phase=(-1, 0)),
            Op("C2", (1,), inner=Op("SDG", (0,)), phase=(1, 1)),
            Op("LAMBDA", (0,), inner=Op("S", (1,))),
            Op("ZPHASE", (0,), (Fraction(2, 3), Fraction(1, 3))),
        )
        circ = Circuit(2, circ.ops + extra)
        text = print_circuit(circ, header=("roundtrip case",))
        assert parse_circuit(text) == circ

    def test_level_conjugated_controls(self):
        # C0/C1 trigger on |0> / |1> by conjugating the control wire
        base = parse_circuit("qutrits 2\nC2[S 1] 0\n")
        for head, level in (("C0", 0), ("C1", 1)):
            circ = parse_circuit(f"qutrits 2\n{head}[S 1] 0\n")
            m = circuit_matrix(circ)
            s = gate_matrix(Op("S", (0,)), 1)
            ident = UnitaryMatrix.identity(3)
            blocks = [ident, ident, ident]
            blocks[level] = s
            rows = [
                [
                    blocks[r // 3].entry(r % 3, c % 3)
                    if r // 3 == c // 3 else UnitaryMatrix.identity(9).entry(r, c) * 0
                    for c in range(9)
                ]
                for r in range(9)
            ]
            assert equal_exact(m, UnitaryMatrix(rows))
            assert circuit_matrix(base).dim == 9

    @pytest.mark.parametrize(
        "bad,fragment",
        [
            ("H 0\n", "qutrits"),
            ("qutrits 0\nH 0\n", "qutrit count"),
            ("qutrits 1\nQ 0\n", "unknown gate"),
            ("qutrits 1\nH 3\n", "wire"),
            ("qutrits 1\nH x\n", "wire"),
            ("qutrits 1\nTAU(99) 0\n", "unknown gate"),
            ("qutrits 1\nZPHASE 1/2 0 0\n", "multiple of 1/3"),
            ("qutrits 2\nC2[X 0] 0\n", "differ"),
            ("qutrits 2\nC2[CX 0 1] 0\n", "unknown gate"),
            ("qutrits 2\nC2[X 1] 0 junk\n", "trailing"),
            ("qutrits 2\nLAMBDA[X 1] 0 phase=zeta\n", "trailing"),
            ("qutrits 1\nH 0 0\n", "trailing"),
        ],
    )
    def test_rejects_malformed_input(self, bad, fragment):
        with pytest.raises(ParseError) as err:
            parse_circuit(bad)
        assert fragment in str(err.value)

    def test_error_carries_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_circuit("qutrits 1\nH 0\nQ 0\n")
        assert "line 3" in str(err.value)


class TestStructure:
    def test_wire_bounds_checked(self):
        with pytest.raises(ValueError):
            Circuit(1, (Op("H", (1,)),))
        with pytest.raises(ValueError):
            Circuit(0, ())

    def test_op_validation(self):
        with pytest.raises(ValueError):
            Op("CX", (0, 0))
        with pytest.raises(ValueError):
            Op("TAU", (0,), ("31",))
        with pytest.raises(ValueError):
            Op("ZPHASE", (0,), (Fraction(1, 2), Fraction(0)))
        with pytest.raises(ValueError):
            Op("C2", (0,), inner=Op("CX", (0, 1)))

    def test_compose_requires_same_width(self):
        with pytest.raises(ValueError):
            compose(Circuit(1), Circuit(2))

    def test_tensor_shifts_bottom_wires(self):
        top = Circuit(1, (Op("H", (0,)),))
        bottom = Circuit(2, (Op("CX", (0, 1)),))
        joined = tensor(top, bottom)
        assert joined.n == 3
        assert joined.ops[1].wires == (1, 2)

    def test_adjoint_reverses_and_inverts(self):
        circ = parse_circuit(
            "qutrits 2\nT 0\nC2[SDG 1] 0 phase=zeta\nZPHASE 1/3 2/3 1\nCX 0 1\n"
        )
        adj = adjoint(circ)
        m = circuit_matrix(circ)
        assert equal_exact(circuit_matrix(adj), m.dag())

    def test_op_text_forms(self):
        assert op_text(Op("TAU", (1,), ("021",))) == "TAU(021) 1"
        assert (
            op_text(Op("ZPHASE", (0,), (Fraction(1, 3), Fraction(2))))
            == "ZPHASE 1/3 2 0"
        )
        c2 = Op("C2", (0,), inner=Op("SDG", (1,)), phase=(1, 1))
        assert op_text(c2) == "C2[SDG 1] 0 phase=zeta^1"


class TestPermutations:
    def test_compose_against_image_tables(self):
        for a in TAU_LABELS:
            for b in TAU_LABELS:
                pa, pb = Permutation.from_label(a), Permutation.from_label(b)
                pc = perm_compose(pa, pb)
                for k in range(3):
                    assert pc(k) == pa(pb(k))
                assert pc == perm_compose(pb.inverse(), pa.inverse()).inverse()

    def test_matrix_agreement(self):
        for label in TAU_LABELS:
            perm = Permutation.from_label(label)
            assert perm.label == label
            m = gate_matrix(Op("TAU", (0,), (label,)), 1)
            for c in range(3):
                assert not m.entry(perm(c), c).is_zero()

"""Group actions on free modules over Z or Z/n, one invertible matrix per generator.

Vectors are columns and the matrix of a generator has the images of the
basis vectors as its columns, so a word uv acts by matrix(u) * matrix(v).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactlinalg import IntMatrix, adjugate
from .presentation import Diagnostic, Presentation
from .words import Generator, Word, word_to_text


@dataclass(frozen=True)
class CoefficientRing:
    """The ring Z when modulus == 0, otherwise Z/modulus with modulus >= 2."""

    modulus: int = 0

    def __post_init__(self):
        if self.modulus != 0 and self.modulus < 2:
            raise ValueError("modulus must be 0 (for Z) or an integer >= 2")

    @classmethod
    def integers(cls) -> CoefficientRing:
        return cls(0)

    @classmethod
    def modular(cls, n: int) -> CoefficientRing:
        return cls(n)

    @classmethod
    def parse(cls, text: str) -> CoefficientRing:
        text = text.strip()
        if text == "Z":
            return cls(0)
        if text.startswith("Z/"):
            return cls(int(text[2:]))
        raise ValueError(f"cannot parse ring {text!r} (expected Z or Z/n)")

    def reduce(self, value: int) -> int:
        return value % self.modulus if self.modulus else value

    def is_unit(self, value: int) -> bool:
        if self.modulus == 0:
            return value in (1, -1)
        return gcd(value % self.modulus, self.modulus) == 1

    def __str__(self):
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"


def _inverse_over_ring(matrix: IntMatrix, ring: CoefficientRing) -> IntMatrix:
    # Adjugate route: exact over Z (determinant +-1) and over Z/n (determinant
    # a unit), no elimination over a non-domain needed.
    det = matrix.det()
    if not ring.is_unit(det):
        raise ValueError(f"determinant {det} is not a unit over {ring}")
    if ring.modulus == 0:
        return adjugate(matrix).scale(det)
    n = ring.modulus
    return adjugate(matrix).scale(pow(det % n, -1, n)).mod(n)


@dataclass(frozen=True)
class Representation:
    """A left action of a generator alphabet on A^rank by invertible matrices."""

    ring: CoefficientRing
    rank: int
    alphabet: tuple[Generator, ...]
    matrices: tuple[IntMatrix, ...]
    inverse_matrices: tuple[IntMatrix, ...]

    @classmethod
    def build(cls, ring: CoefficientRing, alphabet, matrices, rank: int | None = None) -> Representation:
        """Validate and assemble the action; matrices follow alphabet order.

        Rejects matrices of the wrong shape and matrices that are not
        invertible over the ring.
        """
        alphabet = tuple(alphabet)
        matrices = tuple(matrices)
        if len(matrices) != len(alphabet):
            raise ValueError("need exactly one matrix per generator")
        if rank is None:
            if not matrices:
                raise ValueError("rank is required for an empty alphabet")
            rank = matrices[0].rows
        if rank < 1:
            raise ValueError("module rank must be positive")
        reduced = []
        inverses = []
        for gen, matrix in zip(alphabet, matrices):
            if matrix.rows != rank or matrix.cols != rank:
                raise ValueError(
                    f"action matrix for {gen.name!r} is {matrix.rows}x{matrix.cols}, expected {rank}x{rank}"
                )
            matrix = matrix.mod(ring.modulus)
            try:
                inverse = _inverse_over_ring(matrix, ring)
            except ValueError as exc:
                raise ValueError(f"action matrix for {gen.name!r} is not invertible: {exc}") from None
            reduced.append(matrix)
            inverses.append(inverse)
        return cls(ring, rank, alphabet, tuple(reduced), tuple(inverses))

    def action(self, gen: Generator | str) -> IntMatrix:
        name = gen.name if isinstance(gen, Generator) else gen
        for g, matrix in zip(self.alphabet, self.matrices):
            if g.name == name:
                return matrix
        raise KeyError(name)


def change_ring(rep: Representation, ring: CoefficientRing) -> Representation:
    """The same action over a new coefficient ring.

    Allowed from Z to anything, and from Z/n to Z/m when m divides n; other
    changes have no canonical reduction map.
    """
    old = rep.ring.modulus
    if old != 0 and (ring.modulus == 0 or old % ring.modulus):
        raise ValueError(f"cannot change coefficients from {rep.ring} to {ring}")
    return Representation.build(ring, rep.alphabet, rep.matrices, rank=rep.rank)


def evaluate_word(rep: Representation, w: Word) -> IntMatrix:
    """Matrix of a word: the product of generator matrices, with inverse
    matrices for negative letters; the empty word is the identity."""
    if w.alphabet != rep.alphabet:
        raise ValueError("alphabet mismatch")
    result = IntMatrix.identity(rep.rank)
    for index, sign in w.letters:
        factor = rep.matrices[index] if sign > 0 else rep.inverse_matrices[index]
        result = (result * factor).mod(rep.ring.modulus)
    return result


def evaluate_group_ring(rep: Representation, element) -> IntMatrix:
    """Matrix of a group-ring element: coefficient-weighted sum of word matrices."""
    total = IntMatrix.zeros(rep.rank, rep.rank)
    for word, coeff in element.terms.items():
        total = total + evaluate_word(rep, word).scale(coeff)
    return total.mod(rep.ring.modulus)


def check_relators_trivial(rep: Representation, p: Presentation) -> list[Diagnostic]:
    """Report every relator whose action matrix is not the identity."""
    if rep.alphabet != p.generators:
        raise ValueError("alphabet mismatch")
    identity = IntMatrix.identity(rep.rank)
    report = []
    for pos, relator in enumerate(p.relators):
        if evaluate_word(rep, relator) != identity:
            report.append(
                Diagnostic("error", f"relator {pos} ({word_to_text(relator) or '1'}) does not act as the identity")
            )
    return report


def check_bilinear_form_preserved(rep: Representation, form: IntMatrix) -> list[Diagnostic]:
    """Report every generator g whose matrix M fails M^T * form * M = form."""
    if form.rows != rep.rank or form.cols != rep.rank:
        raise ValueError("form has the wrong shape")
    form = form.mod(rep.ring.modulus)
    report = []
    for gen, matrix in zip(rep.alphabet, rep.matrices):
        if (matrix.transpose() * form * matrix).mod(rep.ring.modulus) != form:
            report.append(Diagnostic("error", f"generator {gen.name!r} does not preserve the form"))
    return report

"""Shared randomized-instance builders for the test suite.

Everything takes an explicit random.Random so failures reproduce.
"""

import random

from twistedhom import (
    CoefficientRing,
    IntMatrix,
    Presentation,
    Representation,
    Word,
    builtin_examples,
    change_ring,
    invert,
    multiply,
    unimodular_inverse,
)


def random_word(rng: random.Random, alphabet, max_len=8) -> Word:
    length = rng.randrange(max_len + 1)
    letters = tuple(
        (rng.randrange(len(alphabet)), rng.choice((1, -1))) for _ in range(length)
    )
    return Word(tuple(alphabet), letters)


def random_int_matrix(rng: random.Random, rows, cols, lo=-5, hi=5) -> IntMatrix:
    return IntMatrix(rows, cols, tuple(rng.randint(lo, hi) for _ in range(rows * cols)))


def random_unimodular(rng: random.Random, n, steps=6) -> IntMatrix:
    """Product of elementary row operations applied to the identity."""
    rows = IntMatrix.identity(n).to_rows()
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        kind = rng.randrange(3)
        if kind == 0:
            c = rng.choice((-2, -1, 1, 2))
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif kind == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-a for a in rows[i]]
    return IntMatrix.from_rows(rows)


def random_redundant_relator(rng: random.Random, p: Presentation) -> Word:
    """A word in the normal closure of the relators: products of conjugates."""
    word = Word(p.generators)
    for _ in range(rng.randint(1, 2)):
        base = rng.choice(p.relators)
        if rng.random() < 0.5:
            base = invert(base)
        conj = random_word(rng, p.generators, max_len=3)
        word = multiply(word, multiply(conj, multiply(base, invert(conj))))
    return word


def gf_rank(matrix: IntMatrix, p: int) -> int:
    """Rank over the field Z/p by plain Gaussian elimination.

    Deliberately independent of the Smith-normal-form machinery so it can
    serve as an oracle for prime moduli.
    """
    rows = [[x % p for x in matrix.row(i)] for i in range(matrix.rows)]
    rank = 0
    col = 0
    while rank < len(rows) and col < matrix.cols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def perturbed_pair(rng: random.Random):
    """A random valid (presentation, representation) pair.

    Starts from a built-in example, conjugates the action by a random
    unimodular base change, optionally appends redundant relators, and
    optionally reduces the coefficients. Relators still act trivially by
    construction.
    """
    example = rng.choice(sorted(builtin_examples().values(), key=lambda e: e.name))
    p, rep = example.presentation, example.representation

    q = random_unimodular(rng, rep.rank)
    q_inv = unimodular_inverse(q)
    matrices = [q * m * q_inv for m in rep.matrices]
    rep = Representation.build(rep.ring, rep.alphabet, matrices, rank=rep.rank)

    relators = list(p.relators)
    if p.relators and rng.random() < 0.5:
        relators.append(random_redundant_relator(rng, p))
    p = Presentation(p.generators, tuple(relators))

    modulus = rng.choice((0, 0, 2, 3, 4))
    if modulus:
        rep = change_ring(rep, CoefficientRing(modulus))
    return p, rep

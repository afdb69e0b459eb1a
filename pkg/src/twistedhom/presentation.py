"""Finitely presented groups: a generator alphabet plus relator words."""

from __future__ import annotations

from dataclasses import dataclass

from .words import Generator, Word, invert, multiply


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding; severity is "error" or "warning"."""

    severity: str
    message: str


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))


def from_equations(generators, equations) -> Presentation:
    """Presentation from equations: each pair (u, v) contributes the relator u*v^-1.

    Relator order follows equation order, so downstream matrices are
    reproducible.
    """
    generators = tuple(generators)
    relators = []
    for lhs, rhs in equations:
        if lhs.alphabet != generators or rhs.alphabet != generators:
            raise ValueError("equation words are over a different alphabet")
        relators.append(multiply(lhs, invert(rhs)))
    return Presentation(generators, tuple(relators))


def validate(p: Presentation) -> list[Diagnostic]:
    """Diagnostics: duplicate generator names and foreign-alphabet relators are
    errors, trivial (empty) relators are warnings. An empty report means the
    presentation is usable by every downstream computation."""
    report: list[Diagnostic] = []
    seen: set[str] = set()
    for gen in p.generators:
        if gen.name in seen:
            report.append(Diagnostic("error", f"duplicate generator name {gen.name!r}"))
        seen.add(gen.name)
    for pos, relator in enumerate(p.relators):
        if relator.alphabet != p.generators:
            report.append(Diagnostic("error", f"relator {pos} is over a different alphabet"))
        elif relator.is_identity():
            report.append(Diagnostic("warning", f"relator {pos} is trivial"))
    return report

"""Command-line front end and the group-description file format.

The input format is UTF-8 and line-oriented; blank lines and lines starting
with '#' are skipped::

    generators: a b g d
    relator: a a                  # one relator per line, or:
    relation: a d a = d           # contributes the relator (lhs)(rhs)^-1
    ring: Z                       # or Z/4; a --ring flag overrides this
    rank: 4
    action a: [-1 0 0 0; 0 -1 0 0; 0 0 -1 0; 0 0 0 -1]
    form: [...]                   # optional bilinear form to check
    kerf: [...]                   # optional splitting functional
    expect h1: Z/2 + Z/2          # optional; "expect coh1[Z/2]: ..." pins a ring

Action matrices are written row by row ('rows separated by ;'); their
columns are the images of the module basis vectors. Exit status is 0 only
if every requested diagnostic passes and every applicable expectation
matches.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .exactlinalg import AbelianGroupStructure, IntMatrix
from .goeritzdata import NamedExample, builtin_examples
from .homology import (
    brute_force_h1_mod2,
    coinvariants,
    h1_cohomology,
    h1_homology,
    kerf_reduction,
    uct_check,
)
from .presentation import Presentation, from_equations, validate
from .representation import (
    CoefficientRing,
    Representation,
    change_ring,
    check_bilinear_form_preserved,
    check_relators_trivial,
)
from .words import Generator, ParseError, parse_word, word_to_text

COMPUTATION_ORDER = ("check", "h0", "coh1", "h1", "uct", "oracle")
UCT_MODULI = (2, 3, 4, 8)


class InputFormatError(ValueError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ParsedInput:
    presentation: Presentation
    representation: Representation
    form: IntMatrix | None
    kerf: IntMatrix | None
    expected: dict[str, AbelianGroupStructure] = field(default_factory=dict)


@dataclass(frozen=True)
class JobSpec:
    """One run: an input source, a coefficient ring and computations to do."""

    path: str | None = None
    example: str | None = None
    ring: CoefficientRing | None = None
    computations: tuple[str, ...] = ("check", "h0", "coh1", "h1")
    output_format: str = "text"


def _parse_matrix(text: str, line: int) -> IntMatrix:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise InputFormatError("matrix must be enclosed in [ ]", line)
    rows = []
    for chunk in text[1:-1].split(";"):
        try:
            rows.append([int(tok) for tok in chunk.split()])
        except ValueError:
            raise InputFormatError(f"bad matrix entry in {chunk.strip()!r}", line) from None
    if len({len(r) for r in rows}) > 1:
        raise InputFormatError("matrix rows have unequal lengths", line)
    return IntMatrix.from_rows(rows)


def _format_matrix(matrix: IntMatrix) -> str:
    rows = ["  ".join(str(x) for x in matrix.row(i)) for i in range(matrix.rows)]
    return "[" + ";  ".join(rows) + "]"


def parse_input_file(text: str) -> ParsedInput:
    """Parse the documented format into validated objects.

    Raises InputFormatError with a line number for syntax problems,
    dimension mismatches, unknown generators and non-invertible actions.
    """
    generators: tuple[Generator, ...] | None = None
    relators = []
    ring = CoefficientRing.integers()
    rank: int | None = None
    actions: dict[str, tuple[IntMatrix, int]] = {}
    form = kerf = None
    expected: dict[str, AbelianGroupStructure] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()  # '#' cannot occur in any value
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise InputFormatError(f"expected 'key: value', got {line!r}", lineno)
        key = key.strip()
        value = value.strip()

        if key == "generators":
            try:
                generators = tuple(Generator(tok) for tok in value.split())
            except ValueError as exc:
                raise InputFormatError(str(exc), lineno) from None
        elif key in ("relator", "relation"):
            if generators is None:
                raise InputFormatError("generators must be declared first", lineno)
            try:
                if key == "relator":
                    relators.append(parse_word(value, generators))
                else:
                    lhs_text, eq, rhs_text = value.partition("=")
                    if not eq:
                        raise InputFormatError("relation needs 'lhs = rhs'", lineno)
                    pair = (parse_word(lhs_text, generators), parse_word(rhs_text, generators))
                    relators.append(from_equations(generators, [pair]).relators[0])
            except ParseError as exc:
                raise InputFormatError(str(exc), lineno) from None
        elif key == "ring":
            try:
                ring = CoefficientRing.parse(value)
            except ValueError as exc:
                raise InputFormatError(str(exc), lineno) from None
        elif key == "rank":
            try:
                rank = int(value)
            except ValueError:
                raise InputFormatError(f"bad rank {value!r}", lineno) from None
        elif key.split() and key.split()[0] == "action":
            parts = key.split()
            if len(parts) != 2:
                raise InputFormatError("action needs a generator name", lineno)
            name = parts[1]
            if generators is None or name not in {g.name for g in generators}:
                raise InputFormatError(f"action for undeclared generator {name!r}", lineno)
            actions[name] = (_parse_matrix(value, lineno), lineno)
        elif key == "form":
            form = _parse_matrix(value, lineno)
        elif key == "kerf":
            kerf = _parse_matrix(value, lineno)
        elif key.split() and key.split()[0] == "expect":
            name = key[len("expect") :].strip()
            if not name:
                raise InputFormatError("expect needs a result name", lineno)
            try:
                expected[name] = AbelianGroupStructure.parse(value)
            except ValueError as exc:
                raise InputFormatError(str(exc), lineno) from None
        else:
            raise InputFormatError(f"unknown key {key!r}", lineno)

    if generators is None:
        raise InputFormatError("missing 'generators:' line", len(text.splitlines()) or 1)
    if rank is None:
        raise InputFormatError("missing 'rank:' line", len(text.splitlines()) or 1)
    matrices = []
    for gen in generators:
        if gen.name not in actions:
            raise InputFormatError(f"missing action for generator {gen.name!r}", len(text.splitlines()))
        matrix, lineno = actions[gen.name]
        if matrix.rows != rank or matrix.cols != rank:
            raise InputFormatError(
                f"action for {gen.name!r} is {matrix.rows}x{matrix.cols}, expected {rank}x{rank}", lineno
            )
        matrices.append(matrix)
    try:
        representation = Representation.build(ring, generators, matrices, rank=rank)
    except ValueError as exc:
        raise InputFormatError(str(exc), 1) from None
    presentation = Presentation(generators, tuple(relators))
    return ParsedInput(presentation, representation, form, kerf, expected)


def example_to_text(example: NamedExample) -> str:
    """Serialize a NamedExample in the input file format (round-trips)."""
    p, rep = example.presentation, example.representation
    lines = [f"# {example.name}", "generators: " + " ".join(g.name for g in p.generators)]
    lines.extend(f"relator: {word_to_text(r)}" for r in p.relators)
    lines.append(f"ring: {rep.ring}")
    lines.append(f"rank: {rep.rank}")
    for gen, matrix in zip(rep.alphabet, rep.matrices):
        lines.append(f"action {gen.name}: {_format_matrix(matrix)}")
    if example.form is not None:
        lines.append(f"form: {_format_matrix(example.form)}")
    if example.kerf is not None:
        lines.append(f"kerf: {_format_matrix(example.kerf)}")
    for name in sorted(example.expected):
        lines.append(f"expect {name}: {example.expected[name]}")
    return "\n".join(lines) + "\n"


def _load(job: JobSpec) -> ParsedInput:
    if (job.path is None) == (job.example is None):
        raise ValueError("exactly one of an input path or --example is required")
    if job.example is not None:
        examples = builtin_examples()
        if job.example not in examples:
            known = ", ".join(sorted(examples))
            raise ValueError(f"unknown example {job.example!r} (known: {known})")
        ex = examples[job.example]
        return ParsedInput(ex.presentation, ex.representation, ex.form, ex.kerf, dict(ex.expected))
    with open(job.path, encoding="utf-8") as handle:
        return parse_input_file(handle.read())


def _structure_record(name, ring, structure, witnesses=()):
    return {
        "name": name,
        "ring": str(ring),
        "free_rank": structure.free_rank,
        "torsion": list(structure.torsion),
        "structure": str(structure),
        "witnesses": [list(w) for w in witnesses],
    }


def _expectation(expected, name, ring):
    """Expected structure for a computation under a ring, or None."""
    return expected.get(f"{name}[{ring}]", expected.get(name))


def run(job: JobSpec) -> tuple[int, list[dict]]:
    """Execute the selected computations in a fixed order.

    Returns the exit status and one self-describing record per computation.
    Status 0 means every diagnostic passed and every expectation that
    applies to a computed result matched.
    """
    if not job.computations:
        raise ValueError("at least one computation must be selected")
    data = _load(job)
    ring = job.ring if job.ring is not None else data.representation.ring
    rep = change_ring(data.representation, ring)
    p = data.presentation
    records: list[dict] = []
    failed: list[str] = []

    for computation in COMPUTATION_ORDER:
        if computation not in job.computations:
            continue
        try:
            if computation == "check":
                diagnostics = [("presentation", d) for d in validate(p)]
                diagnostics += [("action", d) for d in check_relators_trivial(rep, p)]
                if data.form is not None:
                    diagnostics += [("form", d) for d in check_bilinear_form_preserved(rep, data.form)]
                findings = [f"{d.severity}: {where}: {d.message}" for where, d in diagnostics]
                passed = not any(d.severity == "error" for _, d in diagnostics)
                records.append({"name": "check", "ring": str(ring), "passed": passed, "findings": findings})
                if not passed:
                    failed.append("check")
            elif computation == "h0":
                structure = coinvariants(rep)
                record = _structure_record("h0", ring, structure)
                _attach_expectation(record, data.expected, "h0", ring, structure, failed)
                records.append(record)
            elif computation == "coh1":
                result = h1_cohomology(p, rep)
                record = _structure_record("coh1", ring, result.h1, result.witnesses)
                _attach_expectation(record, data.expected, "coh1", ring, result.h1, failed)
                records.append(record)
                if data.kerf is not None:
                    try:
                        fast = kerf_reduction(p, rep, data.kerf)
                    except (ValueError, RuntimeError) as exc:
                        records.append({"name": "coh1-kerf", "error": str(exc)})
                        failed.append("coh1-kerf")
                    else:
                        records.append(_structure_record("coh1-kerf", ring, fast.h1, fast.witnesses))
                        if fast.h1 != result.h1:
                            failed.append("coh1-kerf")
            elif computation == "h1":
                structure = h1_homology(p, rep)
                record = _structure_record("h1", ring, structure)
                _attach_expectation(record, data.expected, "h1", ring, structure, failed)
                records.append(record)
            elif computation == "uct":
                comparisons = uct_check(p, data.representation, UCT_MODULI)
                all_match = all(c.match for c in comparisons)
                records.append(
                    {
                        "name": "uct",
                        "ring": str(data.representation.ring),
                        "all_match": all_match,
                        "comparisons": [
                            {
                                "ring": str(c.ring),
                                "computed": str(c.computed),
                                "expected": str(c.expected),
                                "match": c.match,
                            }
                            for c in comparisons
                        ],
                    }
                )
                if not all_match:
                    failed.append("uct")
            elif computation == "oracle":
                counts = brute_force_h1_mod2(p, data.representation)
                records.append(
                    {
                        "name": "oracle",
                        "ring": "Z/2",
                        "z1_count": counts.z1_count,
                        "b1_count": counts.b1_count,
                        "h1_count": counts.h1_count,
                    }
                )
        except (ValueError, RuntimeError) as exc:
            records.append({"name": computation, "error": str(exc)})
            failed.append(computation)

    status = 1 if failed else 0
    records.append({"name": "summary", "exit_status": status, "failed_stages": failed})
    return status, records


def _attach_expectation(record, expected, name, ring, structure, failed):
    expectation = _expectation(expected, name, ring)
    if expectation is None:
        return
    record["expected"] = str(expectation)
    record["match"] = structure == expectation
    if not record["match"]:
        failed.append(name)


_TEXT_LABEL = {"h0": "H_0", "coh1": "H^1", "coh1-kerf": "H^1 (ker-f path)", "h1": "H_1"}


def render_text(records) -> str:
    lines = []
    for record in records:
        name = record["name"]
        if "error" in record:
            lines.append(f"{name}: ERROR: {record['error']}")
        elif name == "check":
            lines.append("check: ok" if record["passed"] else "check: FAILED")
            lines.extend(f"  {finding}" for finding in record["findings"])
        elif name in _TEXT_LABEL:
            line = f"{_TEXT_LABEL[name]} = {record['structure']}"
            if "match" in record:
                line += "  [expected {}: {}]".format(record["expected"], "ok" if record["match"] else "MISMATCH")
            lines.append(line)
        elif name == "uct":
            lines.append("uct: " + ("ok" if record["all_match"] else "FAILED"))
            for c in record["comparisons"]:
                verdict = "ok" if c["match"] else "MISMATCH"
                lines.append(f"  {c['ring']}: computed {c['computed']}, expected {c['expected']} ({verdict})")
        elif name == "oracle":
            lines.append(
                "oracle (mod 2): z1={z1_count} b1={b1_count} h1={h1_count}".format(**record)
            )
        elif name == "summary":
            if record["failed_stages"]:
                lines.append("FAILED stages: " + ", ".join(record["failed_stages"]))
            else:
                lines.append("ok")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="twistedhom",
        description="Twisted first (co)homology of finitely presented groups, exactly.",
    )
    parser.add_argument("path", nargs="?", help="input file in the documented format")
    parser.add_argument("--example", help="name of a built-in example (e.g. e2)")
    parser.add_argument("--ring", help="coefficient ring override: Z or Z/n")
    parser.add_argument(
        "--compute",
        help="comma-separated subset of: " + ", ".join(COMPUTATION_ORDER),
    )
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--check", action="store_true", help="run diagnostics only")
    args = parser.parse_args(argv)

    try:
        ring = CoefficientRing.parse(args.ring) if args.ring else None
        if args.check:
            computations: tuple[str, ...] = ("check",)
        elif args.compute:
            requested = {tok.strip() for tok in args.compute.replace(",", " ").split()}
            unknown = requested - set(COMPUTATION_ORDER)
            if unknown:
                raise ValueError(f"unknown computations: {', '.join(sorted(unknown))}")
            computations = tuple(c for c in COMPUTATION_ORDER if c in requested)
        else:
            computations = ("check", "h0", "coh1", "h1")
        job = JobSpec(args.path, args.example, ring, computations, args.format)
        status, records = run(job)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.format == "structured":
        for record in records:
            print(json.dumps(record, sort_keys=True))
    else:
        print(render_text(records))
    return status


if __name__ == "__main__":
    sys.exit(main())

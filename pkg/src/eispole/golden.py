"""Golden-table corpus: loading, validation, and comparison.

Each case records the expected level decomposition, the expected pole
list, and a free-text source citation.  The corpus is data, not code, so
table provenance stays auditable.  At load time the pole list is checked
to be derivable from the decomposition, so a corrupted entry is caught
before any comparison runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .parabolic import graded_eigenvalues, parabolic_data
from .polemap import pole_polynomial
from .residue_oracle import cross_check
from .rootsys import RootSystemKind, build_root_system
from .sl2decomp import SL2Decomposition, decompose


class CorpusError(ValueError):
    """The corpus file is unreadable or internally inconsistent."""


@dataclass(frozen=True)
class GoldenCase:
    kind: RootSystemKind
    node: int
    expected_decomposition: dict[int, tuple[tuple[int, int], ...]]
    expected_poles: tuple[tuple[Fraction, int], ...]
    source: str


def _poles_from_decomposition(dec) -> tuple[tuple[Fraction, int], ...]:
    pp = pole_polynomial(
        {j: SL2Decomposition(mults=tuple(pairs)) for j, pairs in dec.items()}
    )
    return pp.zeros


def default_corpus_path() -> Path:
    return Path(str(resources.files("eispole").joinpath("data/golden.json")))


def load_corpus(path: str | Path) -> list[GoldenCase]:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc}") from exc
    cases = []
    for entry in raw["cases"]:
        dec = {
            int(j): tuple(
                sorted(((int(l), int(m)) for l, m in pairs), reverse=True)
            )
            for j, pairs in entry["decomposition"].items()
        }
        poles = tuple(
            sorted(
                ((Fraction(s), int(m)) for s, m in entry["poles"]),
                reverse=True,
            )
        )
        case = GoldenCase(
            kind=RootSystemKind.parse(entry["type"]),
            node=int(entry["node"]),
            expected_decomposition=dec,
            expected_poles=poles,
            source=entry.get("source", ""),
        )
        derived = _poles_from_decomposition(case.expected_decomposition)
        if derived != case.expected_poles:
            raise CorpusError(
                f"{case.kind} node {case.node}: pole list does not follow "
                f"from the decomposition (derived {derived})"
            )
        cases.append(case)
    return cases


def compare_case(case: GoldenCase) -> dict:
    rs = build_root_system(case.kind)
    pd = parabolic_data(rs, case.node)
    ge = graded_eigenvalues(pd)
    dec = {j: decompose(vals) for j, vals in ge.levels}
    computed_dec = {
        j: tuple(sorted(d.mults, reverse=True)) for j, d in dec.items()
    }
    computed_poles = pole_polynomial(dec).zeros
    ok = (
        computed_dec == case.expected_decomposition
        and computed_poles == case.expected_poles
    )
    report = {
        "type": str(case.kind),
        "node": case.node,
        "match": ok,
        "source": case.source,
    }
    if not ok:
        report["expected_decomposition"] = case.expected_decomposition
        report["computed_decomposition"] = computed_dec
        report["expected_poles"] = case.expected_poles
        report["computed_poles"] = computed_poles
        # The independent residue route decides whether the corpus entry
        # or the pipeline is wrong.
        report["oracle"] = cross_check(pd)
    return report


def golden_compare(corpus_path: str | Path) -> dict:
    cases = load_corpus(corpus_path)
    results = [compare_case(c) for c in cases]
    mismatches = [r for r in results if not r["match"]]
    report = {
        "cases": len(results),
        "mismatches": mismatches,
        "match": not mismatches,
    }
    if not results:
        report["warning"] = "empty corpus: vacuous pass"
    return report

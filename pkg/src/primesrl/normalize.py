"""Turn raw per-token or per-span argument lists into scoring units."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .model import MergedArgument, PredicateInstance, RoleLabel


class UnknownLabel(ValueError):
    """A role base outside both the numbered-core and AM- families."""


def classify(label: RoleLabel, strict: bool = False) -> str:
    """Return "core" or "modifier" for a normalized label; prefixes are ignored."""
    if label.is_core:
        return "core"
    if label.is_modifier:
        return "modifier"
    if strict:
        raise UnknownLabel("role base %r is neither core nor AM-" % label.base)
    warnings.warn("treating unknown role base %r as a modifier" % label.base)
    return "modifier"


def merge_continuations(pred: PredicateInstance, mode: str = "head") -> list[MergedArgument]:
    """Collapse C-parts into whole-argument units.

    Parts sharing (base, reference flag) form one unit whenever any of them
    carries a C- prefix, regardless of which part carries it; an orphan C-X
    still yields a unit with base X. Plain duplicates without any C-part stay
    separate units. The `mode` parameter is accepted for symmetry with the
    scorers; token sets are unioned identically in both modes.
    """
    groups: dict[tuple[str, bool], list] = {}
    for arg in pred.arguments:
        groups.setdefault((arg.label.base, arg.label.is_reference), []).append(arg)

    units = []
    for (base, is_ref), parts in groups.items():
        parts = sorted(parts, key=lambda a: a.extent[0])
        if any(p.label.is_continuation for p in parts):
            clusters = [parts]
        else:
            clusters = [[p] for p in parts]
        for cluster in clusters:
            tokens = tuple(sorted({t for p in cluster for t in p.extent}))
            units.append(MergedArgument(
                base_label=RoleLabel(base, False, is_ref),
                tokens=tokens,
                part_count=len(cluster),
                first_part_is_base=not cluster[0].label.is_continuation))
    units.sort(key=lambda u: (u.tokens[0], str(u.base_label)))
    return units


@dataclass(frozen=True)
class ReferenceLink:
    """A reference unit together with its candidate referents."""

    unit: MergedArgument
    candidates: tuple[MergedArgument, ...]

    @property
    def referent(self) -> MergedArgument | None:
        return self.candidates[0] if self.candidates else None

    @property
    def is_dangling(self) -> bool:
        return not self.candidates

    @property
    def is_ambiguous(self) -> bool:
        return len(self.candidates) > 1


def resolve_references(units: list[MergedArgument]) -> list[ReferenceLink]:
    """Link each reference unit to the same-base non-reference unit(s).

    When several non-reference units share the base (ambiguous referent) all
    of them are listed; the scorer breaks the tie toward a correct one.
    """
    by_base: dict[str, list[MergedArgument]] = {}
    for unit in units:
        if not unit.is_reference:
            by_base.setdefault(unit.base_label.base, []).append(unit)
    return [ReferenceLink(unit=u, candidates=tuple(by_base.get(u.base_label.base, ())))
            for u in units if u.is_reference]

"""Law checking: value targets, induced maps, and axiom/morphism verdicts.

A target is anything that supports renaming, end-to-end composition, and
same-element contraction with the usual label and grade bookkeeping.  The
checkers run named instance families against a target and report per-family
counts with the first counterexample kept verbatim.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, NamedTuple, Sequence

from . import census
from .assoc import splice, to_surface
from .canonical import all_canonical_diagrams, canonical_diagram
from .surface import Surface, compose, self_glue
from .words import CyclicWord, Renaming


class Target(ABC):
    """Operations a value domain must provide to receive induced maps."""

    name: str = "target"

    @abstractmethod
    def rename(self, x, renaming: Renaming):
        ...

    @abstractmethod
    def compose(self, x, a: str, y, b: str):
        ...

    @abstractmethod
    def contract(self, x, a: str, b: str):
        ...

    @abstractmethod
    def labels_of(self, x) -> frozenset[str]:
        ...

    @abstractmethod
    def grade_of(self, x) -> int:
        ...

    def describe(self, x) -> str:
        return str(x)


class SurfaceTarget(Target):
    """Surfaces acting on themselves; the reference target."""

    name = "surfaces"

    def rename(self, x: Surface, renaming: Renaming) -> Surface:
        return x.rename(renaming)

    def compose(self, x: Surface, a: str, y: Surface, b: str) -> Surface:
        return compose(x, a, y, b)

    def contract(self, x: Surface, a: str, b: str) -> Surface:
        return self_glue(x, a, b)

    def labels_of(self, x: Surface) -> frozenset[str]:
        return x.labels

    def grade_of(self, x: Surface) -> int:
        return x.grade


class TerminalElement(NamedTuple):
    """An element of the one-point-per-signature target."""

    labels: frozenset[str]
    grade: int

    def __str__(self) -> str:
        inner = ", ".join(sorted(self.labels))
        return f"point({{{inner}}}; grade {self.grade})"


class TerminalTarget(Target):
    """The collapse target: only the label set and the grade survive."""

    name = "terminal"

    def rename(self, x: TerminalElement, renaming: Renaming) -> TerminalElement:
        missing = x.labels - renaming.domain
        if missing:
            raise ValueError(f"renaming does not cover {sorted(missing)}")
        return TerminalElement(frozenset(renaming(l) for l in x.labels), x.grade)

    def compose(self, x: TerminalElement, a: str, y: TerminalElement, b: str) -> TerminalElement:
        if a not in x.labels:
            raise ValueError(f"no marked point {a} on the left element")
        if b not in y.labels:
            raise ValueError(f"no marked point {b} on the right element")
        if x.labels & y.labels:
            raise ValueError("elements share marked points")
        return TerminalElement((x.labels - {a}) | (y.labels - {b}), x.grade + y.grade)

    def contract(self, x: TerminalElement, a: str, b: str) -> TerminalElement:
        if a == b:
            raise ValueError("contraction needs two distinct marked points")
        if a not in x.labels or b not in x.labels:
            raise ValueError("contraction points must be marked on the element")
        return TerminalElement(x.labels - {a, b}, x.grade + 1)

    def labels_of(self, x: TerminalElement) -> frozenset[str]:
        return x.labels

    def grade_of(self, x: TerminalElement) -> int:
        return x.grade


def surface_inclusion(word: CyclicWord) -> Surface:
    return to_surface(word)


def terminal_inclusion(word: CyclicWord) -> TerminalElement:
    return TerminalElement(frozenset(word.labels), 0)


def evaluate_expression(target: Target, include: Callable[[CyclicWord], object], expr) -> object:
    """Fold an expression's arcs, in stored order, over the included base word."""
    value = include(CyclicWord(expr.diagram.base))
    for a, b in expr.diagram.arcs:
        value = target.contract(value, a, b)
    return value


def induce(target: Target, include: Callable[[CyclicWord], object], q: Surface) -> object:
    """Value of ``q`` under the extension of ``include`` along contractions."""
    return evaluate_expression(target, include, canonical_diagram(q))


# ---------------------------------------------------------------------------
# reports


@dataclass
class Counterexample:
    family: str
    inputs: tuple[tuple[str, str], ...]
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "inputs": {k: v for k, v in self.inputs},
            "lhs": self.lhs,
            "rhs": self.rhs,
        }

    def __str__(self) -> str:
        parts = [f"    {k} = {v}" for k, v in self.inputs]
        return "\n".join([f"  counterexample for {self.family}:", *parts,
                          f"    lhs = {self.lhs}", f"    rhs = {self.rhs}"])


@dataclass
class FamilyResult:
    checked: int = 0
    failures: int = 0
    counterexample: Counterexample | None = None


@dataclass
class LawReport:
    title: str
    families: dict[str, FamilyResult] = field(default_factory=dict)

    def family(self, name: str) -> FamilyResult:
        if name not in self.families:
            self.families[name] = FamilyResult()
        return self.families[name]

    @property
    def total_checked(self) -> int:
        return sum(f.checked for f in self.families.values())

    @property
    def total_failures(self) -> int:
        return sum(f.failures for f in self.families.values())

    @property
    def passed(self) -> bool:
        return self.total_failures == 0

    def absorb(self, other: "LawReport", prefix: str = "") -> None:
        for name, res in other.families.items():
            fam = self.family(prefix + name)
            fam.checked += res.checked
            fam.failures += res.failures
            if fam.counterexample is None:
                fam.counterexample = res.counterexample

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checked": self.total_checked,
            "failures": self.total_failures,
            "families": {
                name: {
                    "checked": res.checked,
                    "failures": res.failures,
                    "counterexample": res.counterexample.to_json() if res.counterexample else None,
                }
                for name, res in self.families.items()
            },
        }

    def __str__(self) -> str:
        lines = [f"{self.title}"]
        width = max((len(n) for n in self.families), default=0)
        for name, res in self.families.items():
            verdict = "ok" if res.failures == 0 else "FAIL"
            lines.append(f"  {name.ljust(width)}  {res.checked:>7} checked  {res.failures:>3} failed  {verdict}")
            if res.counterexample is not None:
                lines.append(str(res.counterexample))
        lines.append(
            f"  total: {self.total_checked} checked, {self.total_failures} failed -> "
            + ("PASS" if self.passed else "FAIL")
        )
        return "\n".join(lines)


class _LawViolation(Exception):
    pass


class _Session:
    """Runs single instances against a target with bookkeeping postconditions."""

    def __init__(self, target: Target, report: LawReport, budget: int | None = None):
        self.t = target
        self.report = report
        self.budget = budget

    def full(self, family: str) -> bool:
        return self.budget is not None and self.report.family(family).checked >= self.budget

    def rename(self, x, renaming: Renaming):
        t = self.t
        before_labels, before_grade = t.labels_of(x), t.grade_of(x)
        out = t.rename(x, renaming)
        want = frozenset(renaming(l) for l in before_labels)
        if t.labels_of(out) != want or t.grade_of(out) != before_grade:
            raise _LawViolation(f"bookkeeping broke under rename: got {t.describe(out)}")
        return out

    def compose(self, x, a: str, y, b: str):
        t = self.t
        want_labels = (t.labels_of(x) - {a}) | (t.labels_of(y) - {b})
        want_grade = t.grade_of(x) + t.grade_of(y)
        out = t.compose(x, a, y, b)
        if t.labels_of(out) != want_labels or t.grade_of(out) != want_grade:
            raise _LawViolation(f"bookkeeping broke under compose: got {t.describe(out)}")
        return out

    def contract(self, x, a: str, b: str):
        t = self.t
        want_labels = t.labels_of(x) - {a, b}
        want_grade = t.grade_of(x) + 1
        out = t.contract(x, a, b)
        if t.labels_of(out) != want_labels or t.grade_of(out) != want_grade:
            raise _LawViolation(f"bookkeeping broke under contract: got {t.describe(out)}")
        return out

    def check(self, family: str, inputs: Sequence[tuple[str, object]], lhs_fn, rhs_fn) -> None:
        fam = self.report.family(family)
        if self.budget is not None and fam.checked >= self.budget:
            return
        fam.checked += 1
        try:
            lhs = lhs_fn()
            rhs = rhs_fn()
            if lhs == rhs:
                return
            shown = (self.t.describe(lhs), self.t.describe(rhs))
        except _LawViolation as exc:
            shown = (str(exc), "(postcondition)")
        except ValueError as exc:
            # a rejected operation on a well-typed instance is itself a violation
            shown = (f"operation rejected: {exc}", "(precondition)")
        fam.failures += 1
        if fam.counterexample is None:
            fam.counterexample = Counterexample(
                family, tuple((k, str(v)) for k, v in inputs), shown[0], shown[1]
            )


# ---------------------------------------------------------------------------
# instance shapes, shared by the exhaustive and randomized drivers


def _inst_compose_symmetry(s: _Session, x, a, y, b) -> None:
    s.check(
        "compose_symmetry",
        [("x", s.t.describe(x)), ("a", a), ("y", s.t.describe(y)), ("b", b)],
        lambda: s.compose(x, a, y, b),
        lambda: s.compose(y, b, x, a),
    )


def _inst_rename_identity(s: _Session, x) -> None:
    ident = Renaming.identity(s.t.labels_of(x))
    s.check(
        "rename_functoriality",
        [("x", s.t.describe(x)), ("renaming", ident)],
        lambda: s.rename(x, ident),
        lambda: x,
    )


def _inst_rename_composition(s: _Session, x, first: Renaming, second: Renaming) -> None:
    s.check(
        "rename_functoriality",
        [("x", s.t.describe(x)), ("first", first), ("second", second)],
        lambda: s.rename(s.rename(x, first), second),
        lambda: s.rename(x, second.after(first)),
    )


def _inst_compose_equivariance(s: _Session, x, a, y, b, rho: Renaming, sigma: Renaming) -> None:
    outer = rho.restrict(s.t.labels_of(x) - {a}).union(sigma.restrict(s.t.labels_of(y) - {b}))
    s.check(
        "compose_equivariance",
        [("x", s.t.describe(x)), ("a", a), ("y", s.t.describe(y)), ("b", b),
         ("rho", rho), ("sigma", sigma)],
        lambda: s.rename(s.compose(x, a, y, b), outer),
        lambda: s.compose(s.rename(x, rho), rho(a), s.rename(y, sigma), sigma(b)),
    )


def _inst_contract_equivariance(s: _Session, x, a, b, rho: Renaming) -> None:
    outer = rho.restrict(s.t.labels_of(x) - {a, b})
    s.check(
        "contract_equivariance",
        [("x", s.t.describe(x)), ("a", a), ("b", b), ("rho", rho)],
        lambda: s.rename(s.contract(x, a, b), outer),
        lambda: s.contract(s.rename(x, rho), rho(a), rho(b)),
    )


def _inst_contract_commutativity(s: _Session, x, a, b, c, d) -> None:
    s.check(
        "contract_commutativity",
        [("x", s.t.describe(x)), ("a", a), ("b", b), ("c", c), ("d", d)],
        lambda: s.contract(s.contract(x, a, b), c, d),
        lambda: s.contract(s.contract(x, c, d), a, b),
    )


def _inst_contract_compose_exchange(s: _Session, x, a, c, y, b, d) -> None:
    s.check(
        "contract_compose_exchange",
        [("x", s.t.describe(x)), ("a", a), ("c", c), ("y", s.t.describe(y)), ("b", b), ("d", d)],
        lambda: s.contract(s.compose(x, c, y, d), a, b),
        lambda: s.contract(s.compose(x, a, y, b), c, d),
    )


def _inst_contract_factor_left(s: _Session, x, a, c, d, y, b) -> None:
    s.check(
        "contract_factor_left",
        [("x", s.t.describe(x)), ("a", a), ("c", c), ("d", d), ("y", s.t.describe(y)), ("b", b)],
        lambda: s.compose(s.contract(x, c, d), a, y, b),
        lambda: s.contract(s.compose(x, a, y, b), c, d),
    )


def _inst_contract_factor_right(s: _Session, x, a, y, b, c, d) -> None:
    s.check(
        "contract_factor_right",
        [("x", s.t.describe(x)), ("a", a), ("y", s.t.describe(y)), ("b", b), ("c", c), ("d", d)],
        lambda: s.compose(x, a, s.contract(y, c, d), b),
        lambda: s.contract(s.compose(x, a, y, b), c, d),
    )


def _inst_compose_associativity(s: _Session, x, a, y, b, c, z, d) -> None:
    s.check(
        "compose_associativity",
        [("x", s.t.describe(x)), ("a", a), ("y", s.t.describe(y)), ("b", b), ("c", c),
         ("z", s.t.describe(z)), ("d", d)],
        lambda: s.compose(x, a, s.compose(y, c, z, d), b),
        lambda: s.compose(s.compose(x, a, y, b), c, z, d),
    )


AXIOM_FAMILIES = (
    "compose_symmetry",
    "rename_functoriality",
    "compose_equivariance",
    "contract_equivariance",
    "contract_commutativity",
    "contract_compose_exchange",
    "contract_factor_left",
    "contract_factor_right",
    "compose_associativity",
)


def _fresh_names(n: int, avoid: frozenset[str], tag: str) -> list[str]:
    out: list[str] = []
    k = 1
    while len(out) < n:
        name = f"{tag}{k}"
        if name not in avoid:
            out.append(name)
        k += 1
    return out


def _renamings_for(labels: frozenset[str], avoid: frozenset[str], tag: str) -> list[Renaming]:
    """All bijections from ``labels`` onto itself or onto fresh names."""
    src = sorted(labels)
    out = [Renaming(zip(src, image)) for image in permutations(src)]
    fresh = _fresh_names(len(src), avoid | labels, tag)
    out += [Renaming(zip(src, image)) for image in permutations(fresh)]
    return out


def check_axioms(target: Target, elements: Iterable, budget: int | None = None) -> LawReport:
    """Run every well-typed axiom instance drawn from ``elements``.

    Label choices, renamings (onto permuted and onto fresh names), and
    partner elements are enumerated exhaustively; ``budget`` caps the
    instance count per family when set.
    """
    els = list(elements)
    report = LawReport(f"axiom check against target '{target.name}'")
    for name in AXIOM_FAMILIES:
        report.family(name)
    s = _Session(target, report, budget)

    all_labels = frozenset().union(*(target.labels_of(x) for x in els)) if els else frozenset()
    groups: dict[frozenset[str], list] = {}
    for x in els:
        groups.setdefault(target.labels_of(x), []).append(x)
    sets = sorted(groups, key=lambda ls: (len(ls), sorted(ls)))
    disjoint_pairs = [(s1, s2) for s1 in sets for s2 in sets if not s1 & s2]

    def pairs():
        for s1, s2 in disjoint_pairs:
            for x in groups[s1]:
                for y in groups[s2]:
                    yield x, y

    for x, y in pairs():
        if s.full("compose_symmetry"):
            break
        for a in sorted(target.labels_of(x)):
            for b in sorted(target.labels_of(y)):
                _inst_compose_symmetry(s, x, a, y, b)

    for x in els:
        if s.full("rename_functoriality"):
            break
        _inst_rename_identity(s, x)
        for first in _renamings_for(target.labels_of(x), all_labels, "u"):
            for second_image in permutations(
                _fresh_names(len(target.labels_of(x)), all_labels | first.codomain, "v")
            ):
                second = Renaming(zip(sorted(first.codomain), second_image))
                _inst_rename_composition(s, x, first, second)

    for x, y in pairs():
        if s.full("compose_equivariance"):
            break
        lx, ly = target.labels_of(x), target.labels_of(y)
        for a in sorted(lx):
            for b in sorted(ly):
                for rho in _renamings_for(lx, all_labels, "u"):
                    for sigma in _renamings_for(ly, all_labels | rho.codomain, "v"):
                        _inst_compose_equivariance(s, x, a, y, b, rho, sigma)

    for x in els:
        if s.full("contract_equivariance"):
            break
        for a, b in combinations(sorted(target.labels_of(x)), 2):
            for rho in _renamings_for(target.labels_of(x), all_labels, "u"):
                _inst_contract_equivariance(s, x, a, b, rho)

    for x in els:
        if s.full("contract_commutativity"):
            break
        marks = sorted(target.labels_of(x))
        for a, b in combinations(marks, 2):
            for c, d in combinations(sorted(set(marks) - {a, b}), 2):
                _inst_contract_commutativity(s, x, a, b, c, d)

    for x, y in pairs():
        if s.full("contract_compose_exchange"):
            break
        lx, ly = sorted(target.labels_of(x)), sorted(target.labels_of(y))
        for a, c in permutations(lx, 2):
            for b, d in permutations(ly, 2):
                _inst_contract_compose_exchange(s, x, a, c, y, b, d)

    for x, y in pairs():
        if s.full("contract_factor_left"):
            break
        lx, ly = sorted(target.labels_of(x)), sorted(target.labels_of(y))
        for a in lx:
            for c, d in combinations(sorted(set(lx) - {a}), 2):
                for b in ly:
                    _inst_contract_factor_left(s, x, a, c, d, y, b)

    for x, y in pairs():
        if s.full("contract_factor_right"):
            break
        lx, ly = sorted(target.labels_of(x)), sorted(target.labels_of(y))
        for a in lx:
            for b in ly:
                for c, d in combinations(sorted(set(ly) - {b}), 2):
                    _inst_contract_factor_right(s, x, a, y, b, c, d)

    for s1 in sets:
        if s.full("compose_associativity"):
            break
        for s2 in sets:
            if s1 & s2:
                continue
            for s3 in sets:
                if (s1 | s2) & s3:
                    continue
                for x in groups[s1]:
                    for y in groups[s2]:
                        for z in groups[s3]:
                            for a in sorted(s1):
                                for b, c in permutations(sorted(s2), 2):
                                    for d in sorted(s3):
                                        _inst_compose_associativity(s, x, a, y, b, c, z, d)

    return report


# ---------------------------------------------------------------------------
# randomized axiom driver


def _random_renaming(rng: random.Random, labels: frozenset[str], avoid: frozenset[str], tag: str) -> Renaming:
    src = sorted(labels)
    if rng.random() < 0.5:
        image = list(src)
        rng.shuffle(image)
    else:
        image = _fresh_names(len(src), avoid | labels, tag)
        rng.shuffle(image)
    return Renaming(zip(src, image))


def surface_sampler(max_labels: int = 6, max_g: int = 3, max_extra_empty: int = 2):
    """Sampler of random surfaces for the randomized axiom driver."""

    def sample(rng: random.Random, avoid: frozenset[str], min_labels: int = 0) -> Surface:
        n = rng.randint(min_labels, max(min_labels, max_labels))
        labels = _fresh_names(n, avoid, rng.choice("mnpq"))
        return census.random_surface(rng, labels, max_g, max_extra_empty)

    return sample


def terminal_sampler(max_labels: int = 6, max_grade: int = 6):
    """Sampler of terminal-target elements for the randomized axiom driver."""

    def sample(rng: random.Random, avoid: frozenset[str], min_labels: int = 0) -> TerminalElement:
        n = rng.randint(min_labels, max(min_labels, max_labels))
        labels = _fresh_names(n, avoid, rng.choice("mnpq"))
        return TerminalElement(frozenset(labels), rng.randint(0, max_grade))

    return sample


def check_axioms_random(
    target: Target,
    sampler,
    count: int,
    rng: random.Random,
    report: LawReport | None = None,
) -> LawReport:
    """Run ``count`` randomized axiom instances, spread across the families.

    ``sampler(rng, avoid, min_labels)`` must return an element whose labels
    avoid the given set.  Results accumulate into ``report`` when passed.
    """
    if report is None:
        report = LawReport(f"randomized axiom check against target '{target.name}'")
        for name in AXIOM_FAMILIES:
            report.family(name)
    s = _Session(target, report)
    t = target

    def labels_of(x):
        return t.labels_of(x)

    def pick(x):
        return rng.choice(sorted(labels_of(x)))

    def pick2(x, excluded: frozenset[str] = frozenset()):
        return rng.sample(sorted(labels_of(x) - excluded), 2)

    for i in range(count):
        family = AXIOM_FAMILIES[i % len(AXIOM_FAMILIES)]
        if family == "compose_symmetry":
            x = sampler(rng, frozenset(), 1)
            y = sampler(rng, labels_of(x), 1)
            _inst_compose_symmetry(s, x, pick(x), y, pick(y))
        elif family == "rename_functoriality":
            x = sampler(rng, frozenset(), 0)
            if rng.random() < 0.2:
                _inst_rename_identity(s, x)
            else:
                first = _random_renaming(rng, labels_of(x), labels_of(x), "u")
                second = _random_renaming(rng, first.codomain, labels_of(x) | first.codomain, "v")
                _inst_rename_composition(s, x, first, second)
        elif family == "compose_equivariance":
            x = sampler(rng, frozenset(), 1)
            y = sampler(rng, labels_of(x), 1)
            avoid = labels_of(x) | labels_of(y)
            rho = _random_renaming(rng, labels_of(x), avoid, "u")
            sigma = _random_renaming(rng, labels_of(y), avoid | rho.codomain, "v")
            _inst_compose_equivariance(s, x, pick(x), y, pick(y), rho, sigma)
        elif family == "contract_equivariance":
            x = sampler(rng, frozenset(), 2)
            a, b = pick2(x)
            rho = _random_renaming(rng, labels_of(x), labels_of(x), "u")
            _inst_contract_equivariance(s, x, a, b, rho)
        elif family == "contract_commutativity":
            x = sampler(rng, frozenset(), 4)
            a, b = pick2(x)
            c, d = pick2(x, frozenset({a, b}))
            _inst_contract_commutativity(s, x, a, b, c, d)
        elif family == "contract_compose_exchange":
            x = sampler(rng, frozenset(), 2)
            y = sampler(rng, labels_of(x), 2)
            a, c = pick2(x)
            b, d = pick2(y)
            _inst_contract_compose_exchange(s, x, a, c, y, b, d)
        elif family == "contract_factor_left":
            x = sampler(rng, frozenset(), 3)
            y = sampler(rng, labels_of(x), 1)
            a = pick(x)
            c, d = pick2(x, frozenset({a}))
            _inst_contract_factor_left(s, x, a, c, d, y, pick(y))
        elif family == "contract_factor_right":
            x = sampler(rng, frozenset(), 1)
            y = sampler(rng, labels_of(x), 3)
            b = pick(y)
            c, d = pick2(y, frozenset({b}))
            _inst_contract_factor_right(s, x, pick(x), y, b, c, d)
        else:
            x = sampler(rng, frozenset(), 1)
            y = sampler(rng, labels_of(x), 2)
            z = sampler(rng, labels_of(x) | labels_of(y), 1)
            b, c = pick2(y)
            _inst_compose_associativity(s, x, pick(x), y, b, c, z, pick(z))

    return report


# ---------------------------------------------------------------------------
# morphism checkers


def check_cyclic_morphism(
    target: Target,
    include: Callable[[CyclicWord], object],
    words: Iterable[CyclicWord],
    budget: int | None = None,
) -> LawReport:
    """Verify that ``include`` carries cyclic words into the target lawfully."""
    ws = list(words)
    report = LawReport(f"cyclic-side morphism check into target '{target.name}'")
    for name in ("component_preservation", "splice_compatibility", "rename_equivariance"):
        report.family(name)
    s = _Session(target, report, budget)
    all_labels = frozenset().union(*(w.labels for w in ws)) if ws else frozenset()

    for w in ws:
        if s.full("component_preservation"):
            break
        s.check(
            "component_preservation",
            [("w", w)],
            lambda w=w: (target.labels_of(include(w)), target.grade_of(include(w))),
            lambda w=w: (frozenset(w.labels), 0),
        )

    for x in ws:
        if s.full("splice_compatibility"):
            break
        for y in ws:
            if x.labels & y.labels or not x.labels or not y.labels:
                continue
            for a in sorted(x.labels):
                for b in sorted(y.labels):
                    s.check(
                        "splice_compatibility",
                        [("x", x), ("a", a), ("y", y), ("b", b)],
                        lambda x=x, a=a, y=y, b=b: include(splice(x, a, y, b)),
                        lambda x=x, a=a, y=y, b=b: s.compose(include(x), a, include(y), b),
                    )

    for w in ws:
        if s.full("rename_equivariance"):
            break
        for rho in _renamings_for(frozenset(w.labels), all_labels, "u"):
            s.check(
                "rename_equivariance",
                [("w", w), ("rho", rho)],
                lambda w=w, rho=rho: include(w.rename(rho)),
                lambda w=w, rho=rho: s.rename(include(w), rho),
            )

    return report


def check_modular_morphism(
    target: Target,
    include: Callable[[CyclicWord], object],
    surfaces: Iterable[Surface],
    budget: int | None = None,
) -> LawReport:
    """Verify the induced surface-level map respects every operation."""
    qs = list(surfaces)
    report = LawReport(f"surface-level morphism check into target '{target.name}'")
    families = (
        "signature_preservation",
        "rename_compatibility",
        "compose_compatibility",
        "contract_split_compatibility",
        "contract_merge_compatibility",
        "genus_zero_restriction",
    )
    for name in families:
        report.family(name)
    s = _Session(target, report, budget)
    all_labels = frozenset().union(*(q.labels for q in qs)) if qs else frozenset()

    cache: dict[Surface, object] = {}

    def F(q: Surface):
        if q not in cache:
            cache[q] = induce(target, include, q)
        return cache[q]

    for q in qs:
        if s.full("signature_preservation"):
            break
        s.check(
            "signature_preservation",
            [("q", q)],
            lambda q=q: (target.labels_of(F(q)), target.grade_of(F(q))),
            lambda q=q: (q.labels, q.grade),
        )

    for q in qs:
        if s.full("rename_compatibility"):
            break
        for rho in _renamings_for(q.labels, all_labels, "u"):
            s.check(
                "rename_compatibility",
                [("q", q), ("rho", rho)],
                lambda q=q, rho=rho: F(q.rename(rho)),
                lambda q=q, rho=rho: s.rename(F(q), rho),
            )

    for q1 in qs:
        if s.full("compose_compatibility"):
            break
        for q2 in qs:
            if q1.labels & q2.labels:
                continue
            for a in sorted(q1.labels):
                for b in sorted(q2.labels):
                    s.check(
                        "compose_compatibility",
                        [("q1", q1), ("a", a), ("q2", q2), ("b", b)],
                        lambda q1=q1, a=a, q2=q2, b=b: F(compose(q1, a, q2, b)),
                        lambda q1=q1, a=a, q2=q2, b=b: s.compose(F(q1), a, F(q2), b),
                    )

    for q in qs:
        if s.full("contract_split_compatibility") and s.full("contract_merge_compatibility"):
            break
        for a, b in combinations(sorted(q.labels), 2):
            same = q.cycle_containing(a) is q.cycle_containing(b)
            family = "contract_split_compatibility" if same else "contract_merge_compatibility"
            s.check(
                family,
                [("q", q), ("a", a), ("b", b)],
                lambda q=q, a=a, b=b: F(self_glue(q, a, b)),
                lambda q=q, a=a, b=b: s.contract(F(q), a, b),
            )

    for q in qs:
        if s.full("genus_zero_restriction"):
            break
        if q.genus == 0 and q.boundary_count == 1:
            s.check(
                "genus_zero_restriction",
                [("q", q)],
                lambda q=q: F(q),
                lambda q=q: include(q.cycles[0]),
            )

    return report


@dataclass
class AgreementReport:
    """Whether every expression presenting one surface evaluates alike."""

    subject: str
    expressions: int
    values: tuple[str, ...]
    value: object | None

    @property
    def agreed(self) -> bool:
        return len(self.values) == 1

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "expressions": self.expressions,
            "agreed": self.agreed,
            "values": list(self.values),
        }

    def __str__(self) -> str:
        verdict = "agree" if self.agreed else "DISAGREE"
        return (
            f"{self.subject}: {self.expressions} expressions {verdict}"
            + (f" on {self.values[0]}" if self.agreed else f": {', '.join(self.values)}")
        )


def check_well_definedness(target: Target, include: Callable[[CyclicWord], object], q: Surface) -> AgreementReport:
    """Evaluate every canonical expression for ``q`` and compare the values."""
    exprs = all_canonical_diagrams(q)
    seen: list = []
    for expr in exprs:
        value = evaluate_expression(target, include, expr)
        if value not in seen:
            seen.append(value)
    return AgreementReport(
        subject=str(q),
        expressions=len(exprs),
        values=tuple(target.describe(v) for v in seen),
        value=seen[0] if len(seen) == 1 else None,
    )


def _subsets(universe: Sequence[str]):
    for size in range(len(universe) + 1):
        yield from combinations(universe, size)


def check_universal_property(max_labels: int = 3, max_g: int = 1, budget: int | None = None) -> LawReport:
    """Aggregate check: the induced map exists, is unique on values, and is lawful.

    Runs, for both the surface target and the terminal target: agreement of
    all canonical expressions per surface, the cyclic-side morphism laws,
    and the surface-level morphism laws, over every surface on at most
    ``max_labels`` labels with genus at most ``max_g``.
    """
    universe = tuple(str(i + 1) for i in range(max_labels))
    surfaces = [
        q for subset in _subsets(universe) for q in census.enumerate_surfaces(subset, max_g)
    ]
    words = [w for subset in _subsets(universe) for w in census.enumerate_cyclic_words(subset)]

    report = LawReport(
        f"universal-property check over {len(surfaces)} surfaces "
        f"(labels <= {max_labels}, genus <= {max_g})"
    )
    setups: list[tuple[Target, Callable[[CyclicWord], object]]] = [
        (SurfaceTarget(), surface_inclusion),
        (TerminalTarget(), terminal_inclusion),
    ]
    for target, include in setups:
        fam = report.family(f"{target.name}.well_definedness")
        for q in surfaces:
            if budget is not None and fam.checked >= budget:
                break
            fam.checked += 1
            agreement = check_well_definedness(target, include, q)
            if not agreement.agreed:
                fam.failures += 1
                if fam.counterexample is None:
                    fam.counterexample = Counterexample(
                        f"{target.name}.well_definedness",
                        (("q", str(q)),),
                        agreement.values[0],
                        agreement.values[1],
                    )
        report.absorb(
            check_cyclic_morphism(target, include, words, budget), f"{target.name}."
        )
        report.absorb(
            check_modular_morphism(target, include, surfaces, budget), f"{target.name}."
        )

    fam = report.family("surfaces.identity")
    surface_target = SurfaceTarget()
    for q in surfaces:
        if budget is not None and fam.checked >= budget:
            break
        fam.checked += 1
        got = induce(surface_target, surface_inclusion, q)
        if got != q:
            fam.failures += 1
            if fam.counterexample is None:
                fam.counterexample = Counterexample(
                    "surfaces.identity", (("q", str(q)),), str(got), str(q)
                )

    fam = report.family("terminal.signature_value")
    terminal_target = TerminalTarget()
    for q in surfaces:
        if budget is not None and fam.checked >= budget:
            break
        fam.checked += 1
        got = induce(terminal_target, terminal_inclusion, q)
        want = TerminalElement(q.labels, q.grade)
        if got != want:
            fam.failures += 1
            if fam.counterexample is None:
                fam.counterexample = Counterexample(
                    "terminal.signature_value", (("q", str(q)),), str(got), str(want)
                )

    return report


__all__ = [
    "Target",
    "SurfaceTarget",
    "TerminalTarget",
    "TerminalElement",
    "surface_inclusion",
    "terminal_inclusion",
    "evaluate_expression",
    "induce",
    "Counterexample",
    "FamilyResult",
    "LawReport",
    "AgreementReport",
    "AXIOM_FAMILIES",
    "check_axioms",
    "check_axioms_random",
    "surface_sampler",
    "terminal_sampler",
    "check_cyclic_morphism",
    "check_modular_morphism",
    "check_well_definedness",
    "check_universal_property",
]

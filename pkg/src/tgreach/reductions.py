"""Hardness gadgets: SAT -> temporal spanning tree, Set Cover -> k-bi-spanner.

Each generator returns the temporal graph plus a :class:`GadgetMeta`
naming the vertices. The verifiers compare a brute-force answer for the
source problem against a brute-force answer on the gadget.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .core import NON_STRICT, STRICT, Setting, TemporalGraph
from .exact import DEFAULT_MAX_N, SizeGuardError, min_bispanner_bruteforce, tst_bruteforce

MAX_SAT_VARS = 20
MAX_SETCOVER_SUBSETS = 15


class InstanceError(ValueError):
    """Malformed CNF formula or Set Cover instance."""


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables ``1..nvars``; literals are signed DIMACS integers."""

    nvars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = []
        for j, clause in enumerate(self.clauses, start=1):
            lits = tuple(sorted(set(clause), key=lambda x: (abs(x), x)))
            if not lits:
                raise InstanceError(f"clause {j} is empty")
            for lit in lits:
                if lit == 0 or abs(lit) > self.nvars:
                    raise InstanceError(f"clause {j}: literal {lit} outside variables 1..{self.nvars}")
                if -lit in lits:
                    raise InstanceError(f"clause {j} contains both x{abs(lit)} and its negation")
            norm.append(lits)
        object.__setattr__(self, "clauses", tuple(norm))

    @property
    def nclauses(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    nvars = nclauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise InstanceError(f"line {lineno}: expected 'p cnf <nvars> <nclauses>'")
            nvars, nclauses = int(fields[2]), int(fields[3])
            continue
        if nvars is None:
            raise InstanceError(f"line {lineno}: clause before 'p cnf' header")
        try:
            lits = [int(x) for x in line.split()]
        except ValueError:
            raise InstanceError(f"line {lineno}: non-integer literal") from None
        for lit in lits:
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if nvars is None:
        raise InstanceError("missing 'p cnf' header")
    if current:
        clauses.append(current)
    if len(clauses) != nclauses:
        raise InstanceError(f"header announces {nclauses} clauses, found {len(clauses)}")
    return CnfFormula(nvars, tuple(tuple(c) for c in clauses))


def to_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.nvars} {phi.nclauses}"]
    lines += [" ".join(map(str, c)) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SetCoverInstance:
    """Subsets (1-indexed by position) of the universe ``1..universe_size``."""

    universe_size: int
    subsets: tuple[frozenset[int], ...]

    def __post_init__(self):
        subsets = tuple(frozenset(s) for s in self.subsets)
        for i, s in enumerate(subsets, start=1):
            if not s:
                raise InstanceError(f"subset {i} is empty")
            bad = [x for x in s if not 1 <= x <= self.universe_size]
            if bad:
                raise InstanceError(f"subset {i}: element {bad[0]} outside 1..{self.universe_size}")
        covered = frozenset().union(*subsets)
        if covered != frozenset(range(1, self.universe_size + 1)):
            raise InstanceError("subsets do not cover the universe")
        object.__setattr__(self, "subsets", subsets)

    @property
    def m(self) -> int:
        return len(self.subsets)


def parse_setcover(text: str) -> SetCoverInstance:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise InstanceError("expected header '<n> <m>'")
    try:
        n, m = map(int, lines[0])
        subsets = [frozenset(int(x) for x in ln) for ln in lines[1:]]
    except ValueError:
        raise InstanceError("non-integer field") from None
    if len(subsets) != m:
        raise InstanceError(f"header announces {m} subsets, found {len(subsets)}")
    return SetCoverInstance(n, tuple(subsets))


def to_setcover_text(inst: SetCoverInstance) -> str:
    lines = [f"{inst.universe_size} {inst.m}"]
    lines += [" ".join(map(str, sorted(s))) for s in inst.subsets]
    return "\n".join(lines) + "\n"


@dataclass
class GadgetMeta:
    """Vertex names and the affine map ``label = scale * raw + shift``.

    ``size_offset`` is set for bi-spanner gadgets: a cover of size ``k``
    corresponds to a bi-spanner with ``size_offset + k`` edges.
    """

    kind: str
    names: dict[str, int]
    scale: int = 1
    shift: int = 0
    epsilon: Fraction | None = None
    size_offset: int | None = None
    extra: dict[str, str] = field(default_factory=dict)

    def renormalize(self, raw) -> int:
        value = self.scale * Fraction(raw) + self.shift
        if value.denominator != 1:
            raise ValueError(f"raw label {raw} does not map to an integer")
        return int(value)

    def vertex(self, name: str) -> int:
        return self.names[name]

    def name_of(self, vertex: int) -> str:
        for name, v in self.names.items():
            if v == vertex:
                return name
        raise KeyError(vertex)

    def expected_size(self, k: int) -> int:
        if self.size_offset is None:
            raise ValueError("no size formula for this gadget")
        return self.size_offset + k

    def to_text(self) -> str:
        lines = [f"kind={self.kind}"]
        for name, v in sorted(self.names.items(), key=lambda kv: kv[1]):
            lines.append(f"vertex.{v}={name}")
        lines.append(f"scale={self.scale}")
        lines.append(f"shift={self.shift}")
        if self.epsilon is not None:
            lines.append(f"epsilon={self.epsilon.numerator}/{self.epsilon.denominator}")
        if self.size_offset is not None:
            lines.append(f"size_offset={self.size_offset}")
        for key, value in sorted(self.extra.items()):
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> GadgetMeta:
        fields: dict[str, str] = {}
        names: dict[str, int] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, value = line.partition("=")
            if key.startswith("vertex."):
                names[value] = int(key[len("vertex."):])
            else:
                fields[key] = value
        eps = fields.pop("epsilon", None)
        offset = fields.pop("size_offset", None)
        return cls(
            kind=fields.pop("kind"),
            names=names,
            scale=int(fields.pop("scale", 1)),
            shift=int(fields.pop("shift", 0)),
            epsilon=Fraction(eps) if eps is not None else None,
            size_offset=int(offset) if offset is not None else None,
            extra=fields,
        )


def sat_gadget_raw_labels(phi: CnfFormula, epsilon: Fraction = Fraction(1, 2)) -> dict[tuple[str, str], tuple]:
    """Labels of the SAT gadget before renormalization, keyed by vertex names.

    They may be negative or fractional; ``t_plus = nvars + nclauses + 1``.
    """
    n, k = phi.nvars, phi.nclauses
    tp = n + k + 1
    tm = -tp
    raw: dict[tuple[str, str], tuple] = {
        ("B", "T"): (tm, epsilon),
        ("B", "F"): (-epsilon, tp),
    }
    for i in range(1, n + 1):
        raw[("T", f"x{i}")] = (tm - i, i)
        raw[("F", f"x{i}")] = (-i, tp + i)
    for j, clause in enumerate(phi.clauses, start=1):
        for lit in clause:
            i = abs(lit)
            if lit > 0:
                raw[(f"x{i}", f"c{j}")] = (tm - (i + j), i + j)
            else:
                raw[(f"x{i}", f"c{j}")] = (-(i + j), tp + (i + j))
    return raw


def sat_to_tst_gadget(phi: CnfFormula) -> tuple[TemporalGraph, GadgetMeta]:
    """Proper temporal graph, two labels per edge, with a spanning tree iff ``phi`` is satisfiable.

    Raw labels are mapped to positive integers by ``2 * raw + 4n + 4k + 3``
    with epsilon fixed to 1/2.
    """
    n, k = phi.nvars, phi.nclauses
    names = {"B": 0, "T": 1, "F": 2}
    names.update({f"x{i}": 2 + i for i in range(1, n + 1)})
    names.update({f"c{j}": 2 + n + j for j in range(1, k + 1)})
    meta = GadgetMeta(
        kind="sat-tst",
        names=names,
        scale=2,
        shift=4 * n + 4 * k + 3,
        epsilon=Fraction(1, 2),
        extra={"nvars": str(n), "nclauses": str(k), "t_plus": str(n + k + 1)},
    )
    edges = {}
    for (a, b), labels in sat_gadget_raw_labels(phi, meta.epsilon).items():
        edges[(names[a], names[b])] = [meta.renormalize(x) for x in labels]
    return TemporalGraph(len(names), edges), meta


def setcover_to_kbs_gadget(inst: SetCoverInstance) -> tuple[TemporalGraph, GadgetMeta]:
    """Simple temporal graph whose minimum bi-spanner has ``3n + 2m + 3 + k*`` edges,
    ``k*`` being the minimum cover size."""
    n, m = inst.universe_size, inst.m
    names = {"v": 0, "v1": 1, "v2": 2}
    names.update({f"s{i}": 2 + i for i in range(1, m + 1)})
    names.update({f"u{j}": 2 + m + j for j in range(1, n + 1)})
    v, v1, v2 = 0, 1, 2
    s = {i: names[f"s{i}"] for i in range(1, m + 1)}
    u = {j: names[f"u{j}"] for j in range(1, n + 1)}

    edges: dict[tuple[int, int], list[int]] = {}
    for i, subset in enumerate(inst.subsets, start=1):
        edges[(s[i], v)] = [i]
        for j in sorted(subset):
            edges[(s[i], u[j])] = [i]
    for i in s:
        edges[(v1, s[i])] = [m + 1]
        edges[(v2, s[i])] = [m + 2]
    for j in u:
        edges[(v1, u[j])] = [m + 1]
    edges[(v2, v)] = [m + 2]
    fresh = itertools.count(m + 3)
    edges[(v1, v)] = [next(fresh)]
    for j in u:
        edges[(v2, u[j])] = [next(fresh)]
    edges[(v1, v2)] = [next(fresh)]

    meta = GadgetMeta(
        kind="setcover-kbs",
        names=names,
        size_offset=3 * n + 2 * m + 3,
        extra={"universe_size": str(n), "subsets": str(m)},
    )
    return TemporalGraph(len(names), edges), meta


def sat_bruteforce(phi: CnfFormula, max_vars: int = MAX_SAT_VARS) -> dict[int, bool] | None:
    """First satisfying assignment, trying False before True with x1 varying slowest."""
    if phi.nvars > max_vars:
        raise SizeGuardError(f"{phi.nvars} variables exceeds the limit of {max_vars}")
    for values in itertools.product((False, True), repeat=phi.nvars):
        assignment = dict(enumerate(values, start=1))
        if phi.evaluate(assignment):
            return assignment
    return None


def setcover_bruteforce(inst: SetCoverInstance, max_subsets: int = MAX_SETCOVER_SUBSETS) -> tuple[int, tuple[int, ...]]:
    """Minimum cover size and the first cover of that size (1-based subset indices)."""
    if inst.m > max_subsets:
        raise SizeGuardError(f"{inst.m} subsets exceeds the limit of {max_subsets}")
    universe = frozenset(range(1, inst.universe_size + 1))
    for k in range(1, inst.m + 1):
        for combo in itertools.combinations(range(inst.m), k):
            if frozenset().union(*(inst.subsets[i] for i in combo)) == universe:
                return k, tuple(i + 1 for i in combo)
    raise AssertionError("a valid instance is always covered by all its subsets")


def verify_tst_reduction(phi: CnfFormula, max_n: int = DEFAULT_MAX_N) -> bool:
    """Satisfiability of ``phi`` matches spanning-tree existence in its gadget, in both settings."""
    satisfiable = sat_bruteforce(phi) is not None
    G, _ = sat_to_tst_gadget(phi)
    return all(tst_bruteforce(G, setting, max_n=max_n).exists == satisfiable for setting in (STRICT, NON_STRICT))


def verify_kbs_reduction(inst: SetCoverInstance, setting: Setting = NON_STRICT, **guards) -> bool:
    """Minimum bi-spanner of the gadget has exactly ``3n + 2m + 3 + k*`` edges."""
    k_star, _ = setcover_bruteforce(inst)
    G, meta = setcover_to_kbs_gadget(inst)
    found = min_bispanner_bruteforce(G, setting, **guards)
    return found is not None and found[0] == meta.expected_size(k_star)

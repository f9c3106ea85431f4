"""Oracle sweeps behind ``pmcsolver verify``.

Each suite runs a set of contract checks on every instance and records the
violations instead of stopping at the first one.
"""
import logging
import random
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from pmcsolver.config.settings import settings
from pmcsolver.dp.solver import solve_with_containers
from pmcsolver.errors import BudgetExceeded, ClassViolation, InvalidArgument, PrimitiveSeparator
from pmcsolver.graphs.bitset import VertexSet, format_set, iter_bits
from pmcsolver.graphs.graph import Graph, connected_components, open_neighborhood
from pmcsolver.graphs.recognition import classify, degeneracy_coloring
from pmcsolver.harness.generators import Instance, random_instance
from pmcsolver.harness.oracles import brute_tw_subgraph
from pmcsolver.pmcs.containers import (
    impure_pmc_container,
    is_survival_sequence,
    pmc_lift,
    x_rec,
)
from pmcsolver.separators.containers import (
    enumerate_family_f1,
    extend_family_f2,
    is_container,
    witness_container_for_separator,
)
from pmcsolver.separators.minsep import (
    enumerate_minimal_separators,
    enumerate_pmcs,
    full_components,
    is_pmc,
)

logger = logging.getLogger(__name__)

SUITES = ("sep-containers", "pmc-containers", "dp")


class VerifyReport(BaseModel):
    """Outcome of one suite over a batch of instances."""

    suite: str
    instances: int = 0
    skipped: int = 0
    checks: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(message)


def coloring_of(g: Graph, f_vertices: VertexSet) -> List[VertexSet]:
    """Degeneracy coloring of G[F] expressed in the ids of G."""
    members = list(iter_bits(f_vertices))
    classes = []
    for color_class in degeneracy_coloring(g.induced(f_vertices)):
        classes.append(sum(1 << members[i] for i in iter_bits(color_class)))
    return classes


def anticomplete_pair_exists(
    g: Graph, s: VertexSet, l_side: VertexSet, r_side: VertexSet, f_vertices: VertexSet
) -> bool:
    """Some z_l, z_r in S see no solution vertex outside S ∪ L (resp. S ∪ R)."""
    outside_l = f_vertices & ~(s | l_side)
    outside_r = f_vertices & ~(s | r_side)
    has_l = any(not g.adjacency[z] & outside_l for z in iter_bits(s))
    has_r = any(not g.adjacency[z] & outside_r for z in iter_bits(s))
    return has_l and has_r


def _check_separator_containers(report: VerifyReport, inst: Instance, budget: int) -> None:
    g = inst.graph
    if not classify(g).in_class_c:
        report.skipped += 1
        return
    separators = enumerate_minimal_separators(g, budget)
    for k in (1, 2):
        f_vertices = brute_tw_subgraph(g, inst.weights, k)
        coloring = coloring_of(g, f_vertices)
        try:
            f2 = set(extend_family_f2(g, enumerate_family_f1(g, k, budget)))
        except BudgetExceeded:
            f2 = None
        for s in separators:
            full = full_components(g, s).full_components
            for l_side in full:
                for r_side in full:
                    if l_side == r_side:
                        continue
                    label = f"{inst.name} k={k} S=[{format_set(s)}]"
                    try:
                        a = witness_container_for_separator(g, s, l_side, r_side, coloring, f_vertices)
                    except PrimitiveSeparator:
                        pass
                    else:
                        report.check(is_container(a, s, f_vertices), f"{label}: witness is not a container")
                    if f2 is not None and s not in f2:
                        report.check(
                            anticomplete_pair_exists(g, s, l_side, r_side, f_vertices),
                            f"{label}: separator outside F2 without z_l, z_r",
                        )


def _lifting_trials(report: VerifyReport, inst: Instance, rng: random.Random, budget: int) -> None:
    g = inst.graph
    order = list(range(g.n))
    rng.shuffle(order)
    prefix = order[: rng.randint(0, g.n)]
    removed = sum(1 << x for x in prefix)
    members = list(iter_bits(g.vertices & ~removed))
    reduced = g.induced(g.vertices & ~removed)
    for record in enumerate_pmcs(reduced, budget):
        end = sum(1 << members[i] for i in iter_bits(record.omega))
        label = f"{inst.name} prefix={prefix} end=[{format_set(end)}]"
        lifted = pmc_lift(g, prefix, end)
        report.check(is_pmc(g, lifted), f"{label}: lift is not a PMC")
        report.check(is_survival_sequence(g, prefix, lifted), f"{label}: not a survival sequence")
        report.check(lifted & ~removed == end, f"{label}: lift does not end in the start set")


def _check_pmc_containers(
    report: VerifyReport, inst: Instance, rng: random.Random, budget: int
) -> None:
    g = inst.graph
    _lifting_trials(report, inst, rng, budget)
    if not classify(g).in_class_c:
        report.skipped += 1
        return

    pmcs = [record.omega for record in enumerate_pmcs(g, budget)]
    y_family = set()
    for s in enumerate_minimal_separators(g, budget):
        y_family.update(connected_components(g, s))
    produced = set(x_rec(g, y_family, budget))
    for omega in pmcs:
        report.check(omega in produced, f"{inst.name}: x_rec misses [{format_set(omega)}]")

    k = 1
    f_vertices = brute_tw_subgraph(g, inst.weights, k)
    coloring = coloring_of(g, f_vertices)
    try:
        f2 = extend_family_f2(g, enumerate_family_f1(g, k, budget))
    except BudgetExceeded:
        return
    f2_set = set(f2)
    for omega in pmcs:
        if all(adhesion in f2_set for adhesion in _adhesions(g, omega)):
            continue
        try:
            a = impure_pmc_container(g, omega, f2, f_vertices, coloring)
        except ClassViolation as e:
            report.check(False, f"{inst.name}: impure container for [{format_set(omega)}] failed: {e}")
            continue
        report.check(
            is_container(a, omega, f_vertices),
            f"{inst.name}: impure container for [{format_set(omega)}] meets the solution",
        )


def _adhesions(g: Graph, omega: VertexSet) -> List[VertexSet]:
    return [open_neighborhood(g, d) for d in connected_components(g, omega)]


def _check_dp(report: VerifyReport, inst: Instance, budget: int) -> None:
    g = inst.graph
    family = [record.omega for record in enumerate_pmcs(g, budget)]
    for k in (1, 2, 3):
        expected = brute_tw_subgraph(g, inst.weights, k)
        got = solve_with_containers(g, inst.weights, family, k)
        report.check(
            got == expected,
            f"{inst.name} k={k}: DP gave [{format_set(got)}], oracle [{format_set(expected)}]",
        )


def random_instances(count: int, max_n: int, seed: int) -> List[Instance]:
    rng = random.Random(seed)
    instances = []
    for i in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice((0.3, 0.5, 0.7))
        instances.append(random_instance(n, p, rng.randrange(1 << 30), name=f"random-{i}"))
    return instances


def run_suite(
    suite: str,
    instances: Sequence[Instance],
    seed: Optional[int] = None,
    budget: Optional[int] = None,
) -> VerifyReport:
    """Run one suite over the given instances."""
    if suite not in SUITES:
        raise InvalidArgument(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    budget = settings.default_budget if budget is None else budget
    rng = random.Random(settings.seed if seed is None else seed)
    runners: Dict[str, Callable[[VerifyReport, Instance], None]] = {
        "sep-containers": lambda r, inst: _check_separator_containers(r, inst, budget),
        "pmc-containers": lambda r, inst: _check_pmc_containers(r, inst, rng, budget),
        "dp": lambda r, inst: _check_dp(r, inst, budget),
    }
    report = VerifyReport(suite=suite)
    for inst in instances:
        report.instances += 1
        runners[suite](report, inst)
    logger.info(
        f"verify {suite}: {report.instances} instances, {report.checks} checks, "
        f"{len(report.failures)} failures, {report.skipped} skipped"
    )
    return report

"""Property suite over the registry and the report it produces."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..catalog import Status, evaluate_relation, get_relation, list_relations
from ..radii import DEFAULT_CONFIG, SweepConfig
from .ensembles import PRECONDITION_STRUCTURE, EnsembleSpec, Structure, _draw


@dataclass
class Tally:
    satisfied: int = 0
    violated: int = 0
    inconclusive: int = 0

    def add(self, status: Status) -> None:
        if status is Status.SATISFIED:
            self.satisfied += 1
        elif status is Status.VIOLATED:
            self.violated += 1
        else:
            self.inconclusive += 1

    @property
    def total(self) -> int:
        return self.satisfied + self.violated + self.inconclusive

    def to_dict(self) -> dict:
        return {"satisfied": self.satisfied, "violated": self.violated, "inconclusive": self.inconclusive}


@dataclass(frozen=True)
class Incident:
    """A non-Satisfied trial, reported with everything needed to replay it."""

    relation_id: str
    trial: int
    dim: int
    structure: str
    status: str
    slack: float
    inputs_digest: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class ExampleResult:
    fixture_id: str
    quantity: str
    expected: float
    computed: float
    passed: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SuiteReport:
    seed: int | None = None
    trials: int = 0
    dims: tuple = ()
    tallies: dict = field(default_factory=dict)  # relation id -> Tally
    incidents: list = field(default_factory=list)
    examples: list = field(default_factory=list)
    wall_clock: float = 0.0

    @property
    def ok(self) -> bool:
        return (
            all(t.violated == 0 and t.inconclusive == 0 for t in self.tallies.values())
            and all(e.passed for e in self.examples)
        )

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "seed": self.seed,
            "trials": self.trials,
            "dims": list(self.dims),
            "relations": {rid: t.to_dict() for rid, t in sorted(self.tallies.items())},
            "incidents": [i.to_dict() for i in self.incidents],
            "examples": [e.to_dict() for e in self.examples],
            "ok": self.ok,
        }
        if timings:
            out["wall_clock_seconds"] = self.wall_clock
        return out

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings=timings), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = []
        if self.tallies:
            lines.append(f"property suite: seed={self.seed} trials={self.trials} dims={list(self.dims)}")
            for rid, t in sorted(self.tallies.items()):
                lines.append(
                    f"  {rid}: satisfied={t.satisfied} violated={t.violated} inconclusive={t.inconclusive}"
                )
            for inc in self.incidents:
                lines.append(
                    f"  ! {inc.relation_id} trial {inc.trial} dim {inc.dim} ({inc.structure}): "
                    f"{inc.status}, slack {inc.slack:.3e}"
                )
        if self.examples:
            passed = sum(e.passed for e in self.examples)
            lines.append(f"printed examples: {passed}/{len(self.examples)} within band")
            for e in self.examples:
                mark = "pass" if e.passed else "FAIL"
                lines.append(
                    f"  {mark} {e.fixture_id} {e.quantity}: expected {e.expected:g}, computed {e.computed:.6f}"
                )
        lines.append(f"wall clock: {self.wall_clock:.1f} s")
        lines.append("OK" if self.ok else "NOT OK")
        return "\n".join(lines)


def relation_number(rid: str) -> int:
    return int(rid.upper().lstrip("R"))


def trial_rng(seed: int, rid: str, trial: int) -> np.random.Generator:
    """The generator for one trial; depends on (seed, relation, trial) only."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), relation_number(rid), int(trial)]))


def draw_trial_inputs(rid: str, trial: int, dims: Sequence[int], seed: int):
    """Inputs for one trial: ``(matrices, dim, structure)``.

    Unrestricted relations mix general complex and real integer matrices
    50/50; restricted ones draw from the ensemble that certifies the
    precondition.
    """
    rel = get_relation(rid)
    rng = trial_rng(seed, rid, trial)
    dim = int(dims[int(rng.integers(len(dims)))])
    if rel.precondition == "none":
        structure = Structure.GENERAL_COMPLEX if rng.random() < 0.5 else Structure.REAL_INTEGER
    else:
        structure = PRECONDITION_STRUCTURE[rel.precondition]
    spec = EnsembleSpec(dim, structure)
    mats = [_draw(spec, rng) for _ in range(rel.signature.arity)]
    return mats, dim, structure


def run_property_suite(
    relations: Sequence[str] | None = None,
    trials: int = 1000,
    dims: Sequence[int] = (2, 3, 4),
    seed: int = 0,
    cfg: SweepConfig = DEFAULT_CONFIG,
    progress: Callable[[str, Tally], None] | None = None,
) -> SuiteReport:
    """Evaluate each relation on ``trials`` random inputs and tally the outcomes.

    A Violated outcome is re-evaluated with a doubled optimizer resolution and
    the second verdict is the one recorded.
    """
    ids = [r.id for r in list_relations()] if relations is None else [get_relation(r).id for r in relations]
    if int(trials) < 1:
        raise ValueError("trials must be positive")
    dims = tuple(int(d) for d in dims)
    if not dims or min(dims) < 1:
        raise ValueError("dims must be positive integers")
    report = SuiteReport(seed=int(seed), trials=int(trials), dims=dims)
    start = time.perf_counter()
    for rid in ids:
        tally = Tally()
        for k in range(int(trials)):
            mats, dim, structure = draw_trial_inputs(rid, k, dims, seed)
            rep = evaluate_relation(rid, mats, cfg=cfg)
            if rep.status is Status.VIOLATED:
                rep = evaluate_relation(rid, mats, cfg=cfg.doubled())
            tally.add(rep.status)
            if rep.status is not Status.SATISFIED:
                report.incidents.append(
                    Incident(rid, k, dim, structure.value, rep.status.value, rep.slack, rep.inputs_digest)
                )
        report.tallies[rid] = tally
        if progress is not None:
            progress(rid, tally)
    report.wall_clock = time.perf_counter() - start
    return report

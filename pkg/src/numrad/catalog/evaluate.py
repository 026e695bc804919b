"""Evaluate registry relations on concrete matrices."""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import PreconditionError, RelationKindError, SignatureMismatchError
from ..linalg import as_matrix, classify
from ..radii import DEFAULT_CONFIG, SweepConfig
from .approx import Approx
from .context import EvalContext
from .registry import EQ, Kind, Relation, Signature, get_relation

DEFAULT_TOL = 1e-9
DEFAULT_EQ_TOL = 1e-6


class Status(str, enum.Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class LinkResult:
    left: str
    op: str
    right: str
    slack: float
    allowance: float
    accuracy: float
    status: Status

    def to_dict(self) -> dict:
        return {
            "left": self.left,
            "op": self.op,
            "right": self.right,
            "slack": self.slack,
            "allowance": self.allowance,
            "accuracy": self.accuracy,
            "status": self.status.value,
        }


@dataclass(frozen=True)
class BoundReport:
    relation_id: str
    term_values: tuple  # ((name, value), ...)
    term_errors: tuple  # estimated absolute error of each term, same order
    links: tuple  # LinkResult per adjacent pair
    slack: float
    status: Status
    tolerance_used: float
    eq_tolerance_used: float
    inputs_digest: str

    def value(self, name: str) -> float:
        for n, v in self.term_values:
            if n == name:
                return v
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "relation_id": self.relation_id,
            "term_values": [[n, v] for n, v in self.term_values],
            "term_errors": list(self.term_errors),
            "links": [link.to_dict() for link in self.links],
            "slack": self.slack,
            "status": self.status.value,
            "tolerance_used": self.tolerance_used,
            "eq_tolerance_used": self.eq_tolerance_used,
            "inputs_digest": self.inputs_digest,
        }


def inputs_digest(arrays: Sequence[np.ndarray]) -> str:
    h = hashlib.sha256()
    for a in arrays:
        a = np.ascontiguousarray(a, dtype=np.complex128)
        h.update(repr(a.shape).encode())
        h.update(a.tobytes())
    return h.hexdigest()


def check_link(left: Approx, op: str, right: Approx, tol: float, eq_tol: float):
    """Judge one link; returns ``(slack, allowance, accuracy, status)``.

    ``<=``: slack = right - left.  Satisfied when slack >= -tol (1 + |right|);
    Violated when it falls short by more than that plus the combined accuracy
    of both sides; Inconclusive in between.

    ``==``: slack = -|left - right|.  Satisfied when |left - right| <= eq_tol
    plus the combined accuracy, otherwise Violated.
    """
    acc = left.err + right.err
    if op == EQ:
        diff = abs(left.value - right.value)
        status = Status.SATISFIED if diff <= eq_tol + acc else Status.VIOLATED
        return -diff, eq_tol, acc, status
    slack = right.value - left.value
    allowance = tol * (1.0 + abs(right.value))
    if slack >= -allowance:
        status = Status.SATISFIED
    elif slack < -(allowance + acc):
        status = Status.VIOLATED
    else:
        status = Status.INCONCLUSIVE
    return slack, allowance, acc, status


def combine_status(statuses) -> Status:
    statuses = list(statuses)
    if Status.VIOLATED in statuses:
        return Status.VIOLATED
    if Status.INCONCLUSIVE in statuses:
        return Status.INCONCLUSIVE
    return Status.SATISFIED


def _validate_inputs(rel: Relation, inputs) -> list:
    if rel.signature not in (Signature.SINGLE_MATRIX, Signature.MATRIX_PAIR):
        raise SignatureMismatchError(f"{rel.id} does not take matrix inputs")
    if isinstance(inputs, np.ndarray) and inputs.ndim == 2:
        inputs = [inputs]
    mats = [as_matrix(m) for m in inputs]
    if len(mats) != rel.signature.arity:
        raise SignatureMismatchError(
            f"{rel.id} expects {rel.signature.arity} matrix input(s) ({rel.signature.value}), "
            f"got {len(mats)}"
        )
    if len(mats) == 2 and mats[0].shape != mats[1].shape:
        raise SignatureMismatchError(f"{rel.id}: inputs have different dimensions")
    if rel.precondition != "none":
        for i, m in enumerate(mats):
            if not classify(m).satisfies(rel.precondition):
                raise PreconditionError(
                    f"{rel.id} requires {rel.precondition} inputs; input {i + 1} is not"
                )
    return mats


def evaluate_relation(
    rid: str,
    inputs,
    tol: float = DEFAULT_TOL,
    eq_tol: float = DEFAULT_EQ_TOL,
    cfg: SweepConfig = DEFAULT_CONFIG,
) -> BoundReport:
    """Evaluate every term of relation ``rid`` and judge each adjacent link."""
    rel = get_relation(rid)
    mats = _validate_inputs(rel, inputs)
    ctx = EvalContext(cfg)
    values = [Approx.of(term.fn(ctx, *mats)) for term in rel.terms]
    links = []
    for i, op in enumerate(rel.links):
        slack, allowance, acc, status = check_link(values[i], op, values[i + 1], tol, eq_tol)
        links.append(
            LinkResult(rel.terms[i].name, op, rel.terms[i + 1].name, slack, allowance, acc, status)
        )
    return BoundReport(
        relation_id=rel.id,
        term_values=tuple((t.name, v.value) for t, v in zip(rel.terms, values)),
        term_errors=tuple(v.err for v in values),
        links=tuple(links),
        slack=min(link.slack for link in links),
        status=combine_status(link.status for link in links),
        tolerance_used=tol,
        eq_tolerance_used=eq_tol,
        inputs_digest=inputs_digest(mats),
    )


def evaluate_chain(
    rid: str,
    inputs,
    tol: float = DEFAULT_TOL,
    eq_tol: float = DEFAULT_EQ_TOL,
    cfg: SweepConfig = DEFAULT_CONFIG,
) -> BoundReport:
    """Like :func:`evaluate_relation`, restricted to chain relations."""
    rel = get_relation(rid)
    if rel.kind is not Kind.CHAIN:
        raise RelationKindError(f"{rel.id} is a {rel.kind.value}, not a chain")
    return evaluate_relation(rid, inputs, tol=tol, eq_tol=eq_tol, cfg=cfg)

"""End-to-end phase-estimation budgets.

Two routes are costed.  The Trotterized route uses the adaptive
single-ancilla scheme: the step count is

    n_steps = 6.203 * sqrt(W) / ((1 - x)^1.5 * eps^1.5),

where W is the step error norm and a fraction x of the error budget is
assigned to repeat-until-success rotation synthesis, whose per-step T cost is

    n_rt = n_rot * (1.15 * log2(n_rot * sqrt(3 W) / (x sqrt(1-x) eps^1.5)) + 9.2).

The constants 6.203, 1.15 and 9.2 are opaque calibration constants of the
cited schemes.  The qubitized route repeats the walk operator
ceil(pi * lambda / (2 eps)) times, plus a unary iterator overhead of
4 n_walk - 4 T gates.

Step counts are kept continuous (not rounded up) so sweeps produce smooth
curves; x is optimized on a geometric grid followed by golden-section
refinement when not supplied.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .gatecount import StepCost, step_cost_periodic_extended, step_cost_periodic_hubbard
from .qubitization import WalkCosts, walk_costs

PE_STEP_CONSTANT = 6.203
RUS_LOG_COEFF = 1.15
RUS_OFFSET = 9.2

X_GRID_LO = 1e-4
X_GRID_HI = 0.5
X_GRID_POINTS = 200
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass
class QpeEstimate:
    method: str                  # "trotter" | "qubitized"
    total_t: float
    total_rot: float
    n_qubits: int
    eps: float
    x: float | None = None
    intermediates: dict = field(default_factory=dict)


def _trotter_total_t(step: StepCost, w: float, eps: float, x: float) -> tuple:
    n_pe = PE_STEP_CONSTANT * math.sqrt(w) / ((1 - x) ** 1.5 * eps ** 1.5)
    if step.n_rot > 0:
        arg = step.n_rot * math.sqrt(3 * w) / (x * math.sqrt(1 - x) * eps ** 1.5)
        n_rt = step.n_rot * (RUS_LOG_COEFF * math.log2(arg) + RUS_OFFSET)
    else:
        n_rt = 0.0
    return n_pe * (n_rt + step.n_t), n_pe, n_rt


def optimize_x(step: StepCost, w: float, eps: float) -> float:
    """Deterministic grid scan plus golden-section refinement of the synthesis
    error fraction."""
    ratio = (X_GRID_HI / X_GRID_LO) ** (1.0 / (X_GRID_POINTS - 1))
    grid = [X_GRID_LO * ratio ** i for i in range(X_GRID_POINTS)]
    costs = [_trotter_total_t(step, w, eps, x)[0] for x in grid]
    k = costs.index(min(costs))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, X_GRID_POINTS - 1)]
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    for _ in range(60):
        if _trotter_total_t(step, w, eps, c)[0] < _trotter_total_t(step, w, eps, d)[0]:
            b, d = d, c
            c = b - _GOLDEN * (b - a)
        else:
            a, c = c, d
            d = a + _GOLDEN * (b - a)
    return 0.5 * (a + b)


def trotter_qpe(step: StepCost, w: float, eps: float,
                x: float | None = None) -> QpeEstimate:
    """Total T budget for Trotterized phase estimation at accuracy eps."""
    if w <= 0:
        raise ValueError("error norm must be positive")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x is None:
        x = optimize_x(step, w, eps)
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    total_t, n_pe, n_rt = _trotter_total_t(step, w, eps, x)
    # +2 qubits: one adaptive-estimation ancilla, one synthesis ancilla
    return QpeEstimate(
        method="trotter",
        total_t=total_t,
        total_rot=n_pe * step.n_rot,
        n_qubits=step.n_qubits + 2,
        eps=eps,
        x=x,
        intermediates={"n_pe": n_pe, "n_rt": n_rt, "w": w,
                       "n_rot_step": step.n_rot, "n_t_step": step.n_t,
                       "alpha": step.alpha},
    )


def qubitized_qpe(walk: WalkCosts, eps: float) -> QpeEstimate:
    """Total T budget for qubitized phase estimation at accuracy eps."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    n_walk = math.ceil(math.pi * walk.lam / (2 * eps))
    total_t = n_walk * walk.per_walk_t + (4 * n_walk - 4)
    alpha_pe = 2 * math.ceil(math.log2(n_walk + 1)) - 1
    return QpeEstimate(
        method="qubitized",
        total_t=float(total_t),
        total_rot=0.0,
        n_qubits=walk.n_qubits_walk + alpha_pe,
        eps=eps,
        intermediates={"n_walk": n_walk, "lambda": walk.lam,
                       "alpha_pe": alpha_pe, "per_walk_t": walk.per_walk_t,
                       "c_select": walk.c_select, "c_prepare": walk.c_prepare,
                       "c_reflect": walk.c_reflect},
    )


# ---------------------------------------------------------------------------
# sweeps


def _alpha_to_m(n: int, alpha_rule: str) -> int:
    if alpha_rule == "0":
        return 1
    if alpha_rule == "N/4-1":
        return n // 4
    if alpha_rule == "N/2-1":
        return n // 2
    if alpha_rule == "N-1":
        return n
    raise ValueError(f"unknown alpha rule {alpha_rule!r}")


def hubbard_step(n: int, model: str, alpha_rule: str) -> StepCost:
    m = _alpha_to_m(n, alpha_rule)
    if model == "hubbard":
        return step_cost_periodic_hubbard(n, m)
    if model == "extended_hubbard":
        return step_cost_periodic_extended(n, m)
    raise ValueError(f"no periodic step costing for model {model!r}")


def crossover_sweep(w_by_n: dict, eps_rule, l_values,
                    model: str = "hubbard",
                    alpha_rules=("0", "N/2-1"),
                    methods=("trotter", "qubitized"),
                    tau: float = 1.0, u: float = 4.0,
                    theta: int = 10, gamma: int = 40) -> list:
    """Tabulate QPE estimates over lattice sizes.

    ``w_by_n`` maps N to the step error norm; ``eps_rule`` maps N to the
    target accuracy (e.g. ``lambda n: 0.005 * n`` or a constant).  Returns a
    list of row dicts in the fixed CSV column order.
    """
    eps_of = eps_rule if callable(eps_rule) else (lambda n: float(eps_rule))
    rows = []
    for l in l_values:
        n = 2 * l * l
        eps = eps_of(n)
        if "trotter" in methods:
            for rule in alpha_rules:
                step = hubbard_step(n, model, rule)
                est = trotter_qpe(step, w_by_n[n], eps)
                rows.append(_row(est, n, l, rule))
        if "qubitized" in methods:
            est = qubitized_qpe(walk_costs(l, tau, u, theta, gamma), eps)
            rows.append(_row(est, n, l, "-"))
    return rows


CSV_COLUMNS = ["method", "N", "L", "eps", "x", "alpha", "total_t", "total_rot",
               "n_qubits", "n_pe_or_nw", "w_or_lambda"]


def _row(est: QpeEstimate, n: int, l: int, alpha_rule: str) -> dict:
    inter = est.intermediates
    if est.method == "trotter":
        progress, weight = inter["n_pe"], inter["w"]
    else:
        progress, weight = inter["n_walk"], inter["lambda"]
    return {
        "method": est.method, "N": n, "L": l, "eps": est.eps,
        "x": "" if est.x is None else f"{est.x:.6g}",
        "alpha": alpha_rule,
        "total_t": f"{est.total_t:.6g}",
        "total_rot": f"{est.total_rot:.6g}",
        "n_qubits": est.n_qubits,
        "n_pe_or_nw": f"{progress:.6g}",
        "w_or_lambda": f"{weight:.6g}",
    }


def rows_to_csv(rows: list) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()

"""Chunked, resumable counterexample searches.

Search strategy
---------------
Every mode reduces to scanning pairs of perfect powers (P, Q) = (x**n, y**m)
below the bound M and testing whether P +/- Q completes a qualifying triple:

* fermat-catalan: a triple admitting exponents of weight 1/n + 1/m + 1/k < 1
  has at least two terms with representations of exponent >= 3, or one such
  term next to a literal 1 (two squares already weigh 1, and 1 + y^2 = z^2
  has no solution), so pairs drawn from the exponent>=3 power table plus an
  explicit wildcard-1 loop are exhaustive.
* product-target modes (gbtz, nonmaxgcd3, fp, maxgcd-spread1) fix the third
  term to be a bounded-spread product; the spread budget for each (n, m, d)
  follows exactly from the weight inequality, so `decompose` is called with
  the largest admissible spread and nothing more.  Power bases start at 2
  (the literal 1 belongs to the fermat-catalan wildcard only), except in the
  maxgcd mode where x = w*y, y >= 1 parametrizes exactly the maxgcd pairs.

Chunking partitions the (exponent pair, base sub-range) space; chunk results
merge by record identity, so the final record set is byte-identical no
matter the chunk plan, thread count or completion order.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iterproduct
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import arith, families
from .products import (
    ProductDecomposition,
    SpreadConstraints,
    analyze,
    decompose,
    enumerate_products,
)

FORMAT_VERSION = 1

MODES = (
    "fermat-catalan",
    "gbtz",
    "nonmaxgcd3",
    "fp",
    "maxgcd-spread1",
    "pillai",
    "survey",
)

# Bit sizes the corresponding full-scale verification runs have reached,
# keyed by the smallest exponent/degree involved (5 stands for every degree
# from 5 up).  Desk defaults below stay far under these on purpose.
FULL_SCALE_BOUNDS = {2: 71, 3: 80, 4: 100, 5: 113}

_MODE_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "fermat-catalan": {"max_bits": 34, "sign": "plus", "degree": None},
    "gbtz": {"max_bits": 30, "sign": "both", "degree": (3, 10)},
    "nonmaxgcd3": {"max_bits": 28, "sign": "both", "degree": (3, 3)},
    "fp": {"max_bits": 30, "sign": "both", "degree": (4, 21)},
    "maxgcd-spread1": {"max_bits": 30, "sign": "both", "degree": (5, 10)},
    "pillai": {
        "max_bits": 20,
        "sign": "plus",
        "degree": None,
        "max_spread": 0,
        "f_bound": Fraction(41, 42),
        "f_strict": False,
    },
    "survey": {"max_bits": 24, "sign": "both", "degree": (3, 6)},
}


def _parse_fraction(v: Union[str, int, float, Fraction, None]) -> Optional[Fraction]:
    if v is None or isinstance(v, Fraction):
        return v
    return Fraction(v)


@dataclass(frozen=True)
class SearchConfig:
    """Resolved search configuration; semantic fields feed the digest."""

    mode: str
    max_bits: int
    sign: str = "both"
    min_exp: int = 2
    max_exp: int = 113
    min_exp_cap: int = 113
    degree: Optional[Tuple[int, int]] = None
    n_range: Optional[Tuple[int, int]] = None
    m_range: Optional[Tuple[int, int]] = None
    max_spread: Optional[int] = None
    f_bound: Fraction = Fraction(1)
    f_strict: bool = True
    q_bound: Optional[Fraction] = None
    m_bound: Optional[Fraction] = None
    difference: Optional[int] = None
    coeffs: Tuple[int, int, int] = (1, 1, 1)

    @property
    def max_value(self) -> int:
        return 1 << self.max_bits

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 1 <= self.max_bits <= 128:
            raise ValueError("max_bits must be in 1..128")
        if self.sign not in ("plus", "minus", "both"):
            raise ValueError(f"bad sign {self.sign!r}")
        if not 2 <= self.min_exp <= self.max_exp:
            raise ValueError("need 2 <= min_exp <= max_exp")
        if self.degree is not None:
            lo, hi = self.degree
            if not 1 <= lo <= hi:
                raise ValueError(f"bad degree range {self.degree}")
        if self.max_spread is not None and self.max_spread < 0:
            raise ValueError("max_spread must be >= 0")
        if any(c < 1 for c in self.coeffs):
            raise ValueError("coefficients must be positive")
        if self.coeffs != (1, 1, 1) and self.mode != "fermat-catalan":
            raise ValueError("coefficients apply to fermat-catalan mode only")
        if self.mode == "pillai" and (self.difference is None or self.difference < 1):
            raise ValueError("pillai mode needs a positive difference")
        if self.mode == "survey" and (self.n_range is None or self.m_range is None):
            raise ValueError("survey mode needs n_range and m_range")

    def semantic_dict(self) -> Dict[str, Any]:
        """Fields that define the search result (no execution parameters)."""
        return {
            "format": FORMAT_VERSION,
            "mode": self.mode,
            "max_bits": self.max_bits,
            "sign": self.sign,
            "min_exp": self.min_exp,
            "max_exp": self.max_exp,
            "min_exp_cap": self.min_exp_cap,
            "degree": list(self.degree) if self.degree else None,
            "n_range": list(self.n_range) if self.n_range else None,
            "m_range": list(self.m_range) if self.m_range else None,
            "max_spread": self.max_spread,
            "f_bound": str(self.f_bound),
            "f_strict": self.f_strict,
            "q_bound": None if self.q_bound is None else str(self.q_bound),
            "m_bound": None if self.m_bound is None else str(self.m_bound),
            "difference": self.difference,
            "coeffs": list(self.coeffs),
        }

    def digest(self) -> str:
        return hashlib.sha256(canon_json(self.semantic_dict()).encode()).hexdigest()

    def to_dict(self) -> Dict[str, Any]:
        return self.semantic_dict()

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "SearchConfig":
        return make_config(
            d["mode"],
            **{k: v for k, v in d.items() if k not in ("format", "mode")},
        )


def make_config(mode: str, **overrides: Any) -> SearchConfig:
    """Build a SearchConfig from mode defaults plus keyword overrides.

    None overrides fall back to the mode default, so CLI plumbing can pass
    absent flags straight through.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    values: Dict[str, Any] = dict(_MODE_DEFAULTS[mode])
    for k, v in overrides.items():
        if v is not None or k not in values:
            values[k] = v
    values.pop("mode", None)
    for key in ("f_bound", "q_bound", "m_bound"):
        if values.get(key) is not None:
            values[key] = _parse_fraction(values[key])
    for key in ("degree", "n_range", "m_range", "coeffs"):
        if values.get(key) is not None:
            values[key] = tuple(values[key])
    cfg = SearchConfig(mode=mode, **values)
    cfg.validate()
    return cfg


def canon_json(obj: Any) -> str:
    """Canonical JSON used for digests and byte-deterministic logs."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Power table


class PowerTable:
    """Deduplicated table of x**e <= bound, x >= 2, e in [min_exp, max_exp].

    Each distinct value keeps every (base, exponent) representation within
    the exponent range, sorted by exponent ascending.
    """

    def __init__(self, bound: int, min_exp: int, max_exp: int,
                 reps: Dict[int, List[Tuple[int, int]]]):
        self.bound = bound
        self.min_exp = min_exp
        self.max_exp = max_exp
        self._reps = reps
        self.values: Tuple[int, ...] = tuple(sorted(reps))

    def __contains__(self, v: int) -> bool:
        return v in self._reps

    def __len__(self) -> int:
        return len(self._reps)

    def representations(self, v: int) -> List[Tuple[int, int]]:
        return list(self._reps.get(v, ()))


def power_table_estimate(bound: int, min_exp: int, max_exp: int) -> Tuple[int, int]:
    """(entry count, rough byte cost) for a prospective power table."""
    entries = 0
    top = max(2, bound).bit_length() - 1
    for e in range(min_exp, min(max_exp, top) + 1):
        entries += max(0, arith.iroot(bound, e)[0] - 1)
    return entries, entries * 200


def build_power_table(
    bound: int, min_exp: int, max_exp: int, memory_budget: int = 2 << 30
) -> PowerTable:
    """Build the deduplicated power table, or refuse with a size estimate."""
    if bound < 4 or min_exp < 2 or max_exp < min_exp:
        raise ValueError("need bound >= 4 and 2 <= min_exp <= max_exp")
    entries, est = power_table_estimate(bound, min_exp, max_exp)
    if est > memory_budget:
        raise MemoryError(
            f"power table would need about {entries} entries (~{est} bytes), "
            f"over the budget of {memory_budget} bytes"
        )
    reps: Dict[int, List[Tuple[int, int]]] = {}
    top = bound.bit_length() - 1
    for e in range(min_exp, min(max_exp, top) + 1):
        x = 2
        v = x**e
        while v <= bound:
            reps.setdefault(v, []).append((x, e))
            x += 1
            v = x**e
    for v in reps:
        reps[v].sort(key=lambda t: t[1])
    return PowerTable(bound, min_exp, max_exp, reps)


@lru_cache(maxsize=8)
def _power_value_set(bound: int) -> frozenset:
    """Values x**e <= bound with e >= 3; membership prefilter in workers.

    Deliberately wider than any configured exponent window: candidates that
    pass are re-derived exactly (and range-filtered) before recording.
    """
    values = set()
    top = bound.bit_length() - 1
    for e in range(3, top + 1):
        x = 2
        v = x**e
        while v <= bound:
            values.add(v)
            x += 1
            v = x**e
    return frozenset(values)


def _max_base(M: int, e: int) -> int:
    """Largest x with x**e <= M (0 when even 2**e exceeds M)."""
    r = arith.iroot(M, e)[0]
    return r if r >= 2 else 0


def _usable_power(t: int, M: int, power_set: frozenset) -> bool:
    """Quick filter: t is 1, or t <= M and t is a perfect power."""
    if t == 1:
        return True
    if t > M:
        return False
    r = math.isqrt(t)
    return r * r == t or t in power_set


# ---------------------------------------------------------------------------
# Weight bookkeeping


def _weight_ok(cfg: SearchConfig, w: Fraction) -> bool:
    return w < cfg.f_bound if cfg.f_strict else w <= cfg.f_bound


def _spread_cap(n: int, m: int, d: int, f_bound: Fraction, strict: bool) -> int:
    """Largest spread s >= 0 with 1/n + 1/m + (1+s)/d under the bound.

    Returns -1 when not even s = 0 qualifies.
    """
    rem = f_bound - Fraction(1, n) - Fraction(1, m)
    limit = d * rem - 1
    if strict:
        cap = math.ceil(limit) - 1
    else:
        cap = math.floor(limit)
    return max(cap, -1)


def _clamp_spread(cfg: SearchConfig, cap: int) -> int:
    if cfg.max_spread is not None:
        cap = min(cap, cfg.max_spread)
    return cap


def _pillai_degree_range(cfg: SearchConfig) -> Tuple[int, int]:
    if cfg.degree is not None:
        return cfg.degree
    return 2, cfg.max_bits


# ---------------------------------------------------------------------------
# Records


def _record_sort_key(rec: Dict[str, Any]) -> Tuple:
    if rec["mode"] == "survey":
        return (tuple(rec["cell"]),)
    if "values" in rec:
        vs = sorted(rec["values"], reverse=True)
        return (vs[0], vs[1], vs[2], rec["sign"])
    if rec["mode"] == "pillai":
        return (
            rec["z"],
            rec["x"],
            tuple(rec["z_witness"]),
            tuple(rec["x_witness"]),
        )
    return (
        max(rec["p"], rec["z"]),
        min(rec["p"], rec["z"]),
        rec["q"],
        rec["sign"],
        rec["d"],
    )


def _solution_sort_key(sol: Dict[str, Any]) -> Tuple:
    return (
        max(sol["p"], sol["z"]),
        min(sol["p"], sol["z"]),
        sol["q"],
        sol["sign"],
        sol["d"],
    )


def _record_key(rec: Dict[str, Any]) -> Tuple:
    if rec["mode"] == "survey":
        return ("survey", tuple(rec["cell"]))
    if "values" in rec:
        return ("fc", tuple(rec["values"]), tuple(rec["coeffs"]))
    if rec["mode"] == "pillai":
        return (
            "pillai",
            rec["x"],
            rec["z"],
            tuple(rec["x_witness"]),
            tuple(rec["z_witness"]),
        )
    return (rec["mode"], rec["sign"], rec["p"], rec["q"], rec["z"], rec["d"])


def _merged_sorted(a: List, b: List, sort_key: Optional[Callable] = None) -> List:
    seen = {canon_json(x): x for x in a}
    for x in b:
        seen.setdefault(canon_json(x), x)
    return sorted(seen.values(), key=sort_key)


def _merge_into(acc: Dict[Tuple, Dict[str, Any]], rec: Dict[str, Any]) -> None:
    key = _record_key(rec)
    cur = acc.get(key)
    if cur is None:
        acc[key] = rec
        return
    if rec["mode"] == "survey":
        cur["solutions"] = _merged_sorted(
            cur["solutions"], rec["solutions"], _solution_sort_key
        )
        cur["count"] = len(cur["solutions"])
        return
    if "assignments" in rec:
        cur["assignments"] = _merged_sorted(cur["assignments"], rec["assignments"])
        cur["witnesses"] = _merged_sorted(cur["witnesses"], rec["witnesses"])
        cur["witness"] = cur["witnesses"][0]
        cur["weight"] = str(min(Fraction(cur["weight"]), Fraction(rec["weight"])))


@dataclass(frozen=True)
class SolutionRecord:
    """One search finding; `data` is the log-ready dict."""

    data: Dict[str, Any]

    @property
    def mode(self) -> str:
        return self.data["mode"]

    @property
    def sign(self) -> str:
        return self.data["sign"]

    def values(self) -> Tuple[int, ...]:
        d = self.data
        if "values" in d:
            return tuple(d["values"])
        if d["mode"] == "pillai":
            return (d["x"], d["z"])
        return (d["p"], d["q"], d["z"])

    def verify(self, cfg: SearchConfig) -> List[str]:
        return verify_record(self.data, cfg)


# ---------------------------------------------------------------------------
# fermat-catalan mode


def _fc_exp_range(cfg: SearchConfig) -> Tuple[int, int]:
    return max(3, cfg.min_exp), min(cfg.max_exp, cfg.max_bits)


def _fc_reps(cfg: SearchConfig, v: int) -> Optional[List[Tuple[int, int]]]:
    """Representations of a term value within the configured exponent range.

    [] marks the wildcard value 1; None marks 'not usable as a term'.
    """
    if v == 1:
        return []
    reps = [
        (b, e)
        for b, e in arith.perfect_power_exponents(v)
        if max(2, cfg.min_exp) <= e <= cfg.max_exp
    ]
    return reps or None


def _fc_candidate(cfg: SearchConfig, vx: int, vy: int, vz: int,
                  acc: Dict[Tuple, Dict[str, Any]]) -> None:
    """Validate a filled slot triple A vx + B vy = C vz and record it."""
    A, B, C = cfg.coeffs
    M = cfg.max_value
    if not (1 <= vx <= M and 1 <= vy <= M and 1 <= vz <= M):
        return
    if A * vx + B * vy != C * vz:
        return
    if vx == 1 and vy == 1 and vz == 1:
        return  # all-wildcard triples carry no exponent content
    if math.gcd(vx, vy) != 1 or math.gcd(vx, vz) != 1 or math.gcd(vy, vz) != 1:
        return
    slot_reps = []
    for v in (vx, vy, vz):
        reps = _fc_reps(cfg, v)
        if reps is None:
            return
        slot_reps.append(reps)
    best: Optional[Tuple[Fraction, Tuple[int, ...]]] = None
    for combo in iterproduct(*[[e for _, e in reps] or [0] for reps in slot_reps]):
        w = sum((Fraction(1, e) for e in combo if e), Fraction(0))
        if not _weight_ok(cfg, w):
            continue
        nonwild = [e for e in combo if e]
        if nonwild and min(nonwild) > cfg.min_exp_cap:
            continue
        if best is None or (w, combo) < best:
            best = (w, combo)
    if best is None:
        return
    weight, assignment = best
    if A == B and vx > vy:
        vx, vy = vy, vx
        slot_reps[0], slot_reps[1] = slot_reps[1], slot_reps[0]
        assignment = (assignment[1], assignment[0], assignment[2])
    rec = {
        "mode": cfg.mode,
        "sign": "plus",
        "values": [vx, vy, vz],
        "coeffs": list(cfg.coeffs),
        "reps": [[[b, e] for b, e in reps] for reps in slot_reps],
        "assignment": list(assignment),
        "weight": str(weight),
    }
    _merge_into(acc, rec)


def _fc_try_pair(cfg: SearchConfig, P: int, Q: int, power_set: frozenset,
                 acc: Dict[Tuple, Dict[str, Any]]) -> None:
    """Solve for the missing slot given two known term values P >= Q."""
    A, B, C = cfg.coeffs
    M = cfg.max_value
    if (A, B, C) == (1, 1, 1):
        t = P + Q
        if t <= M and _usable_power(t, M, power_set):
            _fc_candidate(cfg, Q, P, t, acc)
        t = P - Q
        if t >= 1 and _usable_power(t, M, power_set):
            _fc_candidate(cfg, t, Q, P, acc)
        return
    # General coefficients: try every slot layout for the known pair.
    for va, vb in ((P, Q), (Q, P)):
        num = A * va + B * vb
        if num % C == 0 and _usable_power(num // C, M, power_set):
            _fc_candidate(cfg, va, vb, num // C, acc)
        num = C * va - A * vb
        if num > 0 and num % B == 0 and _usable_power(num // B, M, power_set):
            _fc_candidate(cfg, vb, num // B, va, acc)
        num = C * va - B * vb
        if num > 0 and num % A == 0 and _usable_power(num // A, M, power_set):
            _fc_candidate(cfg, num // A, vb, va, acc)


def _run_fc_pair_unit(cfg: SearchConfig, unit: Dict[str, Any],
                      acc: Dict[Tuple, Dict[str, Any]]) -> None:
    M = cfg.max_value
    e1, e2 = unit["e1"], unit["e2"]
    power_set = _power_value_set(M)
    same = e1 == e2
    yvals = [(y, y**e2) for y in range(2, _max_base(M, e2) + 1)]
    for x in range(unit["xlo"], unit["xhi"] + 1):
        P = x**e1
        for y, Q in yvals:
            if same and y >= x:
                break
            if Q == P or math.gcd(x, y) != 1:
                continue
            if P >= Q:
                _fc_try_pair(cfg, P, Q, power_set, acc)
            else:
                _fc_try_pair(cfg, Q, P, power_set, acc)


def _run_fc_one_unit(cfg: SearchConfig, unit: Dict[str, Any],
                     acc: Dict[Tuple, Dict[str, Any]]) -> None:
    M = cfg.max_value
    power_set = _power_value_set(M)
    e = unit["e1"]
    for x in range(unit["xlo"], unit["xhi"] + 1):
        _fc_try_pair(cfg, x**e, 1, power_set, acc)


def _run_fc_wild_unit(cfg: SearchConfig, unit: Dict[str, Any],
                      acc: Dict[Tuple, Dict[str, Any]]) -> None:
    """Triples with two literal-1 terms (possible under general coefficients)."""
    A, B, C = cfg.coeffs
    if (A + B) % C == 0:
        _fc_candidate(cfg, 1, 1, (A + B) // C, acc)
    if C - A > 0 and (C - A) % B == 0:
        _fc_candidate(cfg, 1, (C - A) // B, 1, acc)
    if C - B > 0 and (C - B) % A == 0:
        _fc_candidate(cfg, (C - B) // A, 1, 1, acc)


# ---------------------------------------------------------------------------
# product-target modes


def _emit_product(cfg: SearchConfig, acc: Dict[Tuple, Dict[str, Any]], *,
                  sign: str, n: int, m: int, P: int, Q: int, Z: int, d: int,
                  wits: Sequence[ProductDecomposition],
                  cell: Optional[Tuple[int, int, int]] = None) -> None:
    if not wits:
        return
    g, quality = arith.gcd_quality(P, Q)
    weight = min(Fraction(1, n) + Fraction(1, m) + w.weight for w in wits)
    witnesses = sorted(list(w.factors) for w in wits)
    rec: Dict[str, Any] = {
        "mode": cfg.mode,
        "sign": sign,
        "p": P,
        "q": Q,
        "z": Z,
        "d": d,
        "assignments": [[n, m]],
        "witnesses": witnesses,
        "witness": witnesses[0],
        "weight": str(weight),
        "gcd": g,
        "gcd_quality": str(quality),
        "maxgcd": g == min(P, Q),
        "coprime": g == 1,
    }
    if cfg.mode == "maxgcd-spread1":
        x = arith.iroot(P, n)[0]
        y = arith.iroot(Q, n)[0]
        st = families.is_standard(x, y, n, Z, sign)
        rec["standard"] = list(st) if st else False
    if cell is not None:
        del rec["mode"]
        key = ("survey", cell)
        cur = acc.get(key)
        if cur is None:
            acc[key] = {
                "mode": "survey",
                "cell": list(cell),
                "count": 1,
                "solutions": [rec],
            }
        else:
            cur["solutions"] = _merged_sorted(
                cur["solutions"], [rec], _solution_sort_key
            )
            cur["count"] = len(cur["solutions"])
        return
    _merge_into(acc, rec)


def _signs(cfg: SearchConfig) -> Tuple[str, ...]:
    return ("plus", "minus") if cfg.sign == "both" else (cfg.sign,)


def _run_prodpair_unit(cfg: SearchConfig, unit: Dict[str, Any],
                       acc: Dict[Tuple, Dict[str, Any]]) -> None:
    """gbtz and nonmaxgcd3 units: powers x**n vs y**m, x in the split range."""
    M = cfg.max_value
    n, m = unit["e1"], unit["e2"]
    deg_lo = max(3, cfg.degree[0])
    deg_hi = cfg.degree[1]
    signs = _signs(cfg)
    same = n == m
    coprime_mode = cfg.mode == "gbtz"
    floor_s = 1 if cfg.mode == "nonmaxgcd3" else 0
    degs = []
    for d in range(deg_lo, min(n, m, deg_hi) + 1):
        cap = _clamp_spread(cfg, _spread_cap(n, m, d, cfg.f_bound, cfg.f_strict))
        if cap >= floor_s:
            degs.append((d, cap))
    if not degs:
        return
    yvals = [(y, y**m) for y in range(2, _max_base(M, m) + 1)]
    for x in range(unit["xlo"], unit["xhi"] + 1):
        P = x**n
        for y, Q in yvals:
            if same and y >= x:
                break
            if Q == P:
                continue
            if coprime_mode:
                if math.gcd(x, y) != 1:
                    continue
            elif math.gcd(P, Q) == min(P, Q):
                continue
            for sign in signs:
                if sign == "plus":
                    Z = P + Q
                    if Z > M:
                        continue
                else:
                    Z = abs(P - Q)
                if P >= Q:
                    bn, bm, bp, bq = n, m, P, Q
                else:
                    bn, bm, bp, bq = m, n, Q, P
                for d, cap in degs:
                    wits = decompose(Z, d, cap)
                    if floor_s:
                        wits = [w for w in wits if w.spread >= floor_s]
                    _emit_product(
                        cfg, acc, sign=sign, n=bn, m=bm,
                        P=bp, Q=bq, Z=Z, d=d, wits=wits,
                    )


def _run_fp_unit(cfg: SearchConfig, unit: Dict[str, Any],
                 acc: Dict[Tuple, Dict[str, Any]]) -> None:
    """fp units: x**n +/- y**n = Z of degree n, spread <= n-4, non-maxgcd."""
    M = cfg.max_value
    n = unit["e1"]
    signs = _signs(cfg)
    cap = _clamp_spread(cfg, _spread_cap(n, n, n, cfg.f_bound, cfg.f_strict))
    if cap < 0:
        return
    for x in range(unit["xlo"], unit["xhi"] + 1):
        P = x**n
        for y in range(2, x):
            if x % y == 0:
                continue  # maxgcd pairs excluded
            Q = y**n
            for sign in signs:
                Z = P + Q if sign == "plus" else P - Q
                if Z > M:
                    continue
                wits = decompose(Z, n, cap)
                _emit_product(
                    cfg, acc, sign=sign, n=n, m=n, P=P, Q=Q, Z=Z, d=n, wits=wits
                )


def _run_maxgcd_unit(cfg: SearchConfig, unit: Dict[str, Any],
                     acc: Dict[Tuple, Dict[str, Any]]) -> None:
    """maxgcd-spread1 units: x = w*y, Z of degree n and spread <= 1."""
    M = cfg.max_value
    n = unit["e1"]
    signs = _signs(cfg)
    cap = _clamp_spread(cfg, 1)
    if cap < 0:
        return
    xmax = _max_base(M, n)
    for y in range(unit["xlo"], unit["xhi"] + 1):
        Q = y**n
        for w in range(1, xmax // y + 1):
            P = (w * y) ** n
            for sign in signs:
                if sign == "minus" and w == 1:
                    continue
                Z = P + Q if sign == "plus" else P - Q
                if Z > M:
                    continue
                wits = decompose(Z, n, cap)
                _emit_product(
                    cfg, acc, sign=sign, n=n, m=n, P=P, Q=Q, Z=Z, d=n, wits=wits
                )


def _run_survey_unit(cfg: SearchConfig, unit: Dict[str, Any],
                     acc: Dict[Tuple, Dict[str, Any]]) -> None:
    n, m, d = unit["e1"], unit["e2"], unit["d"]
    acc.setdefault(
        ("survey", (n, m, d)),
        {"mode": "survey", "cell": [n, m, d], "count": 0, "solutions": []},
    )
    if d <= 2:
        return  # vacuous cells: the product side needs degree > 2
    M = cfg.max_value
    signs = _signs(cfg)
    cap = _clamp_spread(cfg, _spread_cap(n, m, d, cfg.f_bound, cfg.f_strict))
    if cap < 0:
        return
    yvals = [(y, y**m) for y in range(2, _max_base(M, m) + 1)]
    for x in range(2, _max_base(M, n) + 1):
        P = x**n
        for y, Q in yvals:
            if Q == P or math.gcd(P, Q) == min(P, Q):
                continue
            for sign in signs:
                Z = P + Q if sign == "plus" else P - Q
                if not 1 <= Z <= M:
                    continue
                wits = decompose(Z, d, cap)
                _emit_product(
                    cfg, acc, sign=sign, n=n, m=m, P=P, Q=Q, Z=Z, d=d,
                    wits=wits, cell=(n, m, d),
                )


def _run_pillai_unit(cfg: SearchConfig, unit: Dict[str, Any],
                     acc: Dict[Tuple, Dict[str, Any]]) -> None:
    """pillai units: products Z of one degree, X = Z - B over the full range."""
    M = cfg.max_value
    B = cfg.difference
    lo, hi = _pillai_degree_range(cfg)
    s_cap = cfg.max_spread if cfg.max_spread is not None else 0
    cons = SpreadConstraints(
        degree=unit["d"], max_spread=s_cap, max_spread_sq_over_base=cfg.m_bound
    )
    for zdec in enumerate_products(cons, M):
        X = zdec.value - B
        if X < 1:
            continue
        for dx in range(lo, hi + 1):
            for xdec in decompose(X, dx, s_cap):
                if (
                    cfg.m_bound is not None
                    and xdec.spread_sq_over_base() > cfg.m_bound
                ):
                    continue
                w = xdec.weight + zdec.weight
                if not _weight_ok(cfg, w):
                    continue
                rec = {
                    "mode": "pillai",
                    "sign": "plus",
                    "difference": B,
                    "x": X,
                    "z": zdec.value,
                    "x_witness": list(xdec.factors),
                    "z_witness": list(zdec.factors),
                    "weight": str(w),
                }
                _merge_into(acc, rec)


_UNIT_RUNNERS = {
    "fcpair": _run_fc_pair_unit,
    "fcone": _run_fc_one_unit,
    "fcwild": _run_fc_wild_unit,
    "prodpair": _run_prodpair_unit,
    "fp": _run_fp_unit,
    "maxgcd": _run_maxgcd_unit,
    "survey": _run_survey_unit,
    "pillai": _run_pillai_unit,
}


# ---------------------------------------------------------------------------
# Planning and chunked execution


def _mode_units(cfg: SearchConfig) -> List[Dict[str, Any]]:
    """The deterministic unit list covering the whole search space."""
    M = cfg.max_value
    units: List[Dict[str, Any]] = []
    if cfg.mode == "fermat-catalan":
        lo, hi = _fc_exp_range(cfg)
        exps = [e for e in range(lo, hi + 1) if _max_base(M, e) >= 2]
        units.append({"kind": "fcwild", "e1": 0, "e2": 0, "xlo": 0, "xhi": 0,
                      "cost": 1})
        for i, e1 in enumerate(exps):
            n1 = _max_base(M, e1) - 1
            units.append(
                {"kind": "fcone", "e1": e1, "e2": 0, "xlo": 2,
                 "xhi": _max_base(M, e1), "cost": n1}
            )
            for e2 in exps[i:]:
                n2 = _max_base(M, e2) - 1
                units.append(
                    {"kind": "fcpair", "e1": e1, "e2": e2, "xlo": 2,
                     "xhi": _max_base(M, e1), "cost": n1 * n2}
                )
    elif cfg.mode in ("gbtz", "nonmaxgcd3"):
        deg_lo, deg_hi = cfg.degree
        floor_s = 1 if cfg.mode == "nonmaxgcd3" else 0
        elo = max(3, cfg.min_exp)
        ehi = min(cfg.max_exp, cfg.max_bits)
        for n in range(elo, ehi + 1):
            if _max_base(M, n) < 2:
                break
            for m in range(n, ehi + 1):
                if _max_base(M, m) < 2:
                    break
                d_best = min(n, m, deg_hi)
                if d_best < max(3, deg_lo):
                    continue
                if _spread_cap(n, m, d_best, cfg.f_bound, cfg.f_strict) < floor_s:
                    continue
                units.append(
                    {"kind": "prodpair", "e1": n, "e2": m, "xlo": 2,
                     "xhi": _max_base(M, n),
                     "cost": (_max_base(M, n) - 1) * (_max_base(M, m) - 1)}
                )
    elif cfg.mode == "fp":
        lo, hi = cfg.degree
        for n in range(max(4, lo), hi + 1):
            nb = _max_base(M, n)
            if nb < 3:
                continue
            if _spread_cap(n, n, n, cfg.f_bound, cfg.f_strict) < 0:
                continue
            units.append(
                {"kind": "fp", "e1": n, "e2": n, "xlo": 3, "xhi": nb,
                 "cost": nb * nb // 2}
            )
    elif cfg.mode == "maxgcd-spread1":
        lo, hi = cfg.degree
        for n in range(max(2, lo), hi + 1):
            nb = _max_base(M, n)
            if nb < 1:
                continue
            units.append(
                {"kind": "maxgcd", "e1": n, "e2": n, "xlo": 1, "xhi": nb,
                 "cost": nb * 8}
            )
    elif cfg.mode == "survey":
        nlo, nhi = cfg.n_range
        mlo, mhi = cfg.m_range
        dlo, dhi = cfg.degree
        for n in range(nlo, nhi + 1):
            for m in range(mlo, mhi + 1):
                cost = (_max_base(M, n) - 1) * (_max_base(M, m) - 1)
                for d in range(dlo, dhi + 1):
                    units.append(
                        {"kind": "survey", "e1": n, "e2": m, "d": d,
                         "xlo": 0, "xhi": 0,
                         "cost": max(cost, 0) if d > 2 else 0}
                    )
    elif cfg.mode == "pillai":
        lo, hi = _pillai_degree_range(cfg)
        for d in range(lo, hi + 1):
            units.append(
                {"kind": "pillai", "e1": 0, "e2": 0, "d": d, "xlo": 0,
                 "xhi": 0, "cost": arith.iroot(M, d)[0]}
            )
    else:  # pragma: no cover
        raise ValueError(cfg.mode)
    return units


def _unit_order_key(u: Dict[str, Any]) -> Tuple:
    return (u["kind"], u["e1"], u.get("e2", 0), u.get("d", 0), u["xlo"])


def _splittable(unit: Dict[str, Any]) -> bool:
    return unit["kind"] in ("fcpair", "fcone", "prodpair", "fp", "maxgcd") and (
        unit["xhi"] > unit["xlo"]
    )


def plan_chunks(cfg: SearchConfig, n_chunks: int) -> List[List[Dict[str, Any]]]:
    """Deterministic chunk plan: a list of unit lists covering the search.

    Heavy units are split on their base sub-range until at least n_chunks
    pieces exist, then pieces are packed into n_chunks balanced groups.
    """
    if n_chunks < 1:
        raise ValueError("n_chunks must be >= 1")
    pieces = _mode_units(cfg)
    while len(pieces) < n_chunks:
        pieces.sort(key=lambda u: (-u["cost"],) + _unit_order_key(u))
        head = pieces[0]
        if not _splittable(head):
            break
        mid = (head["xlo"] + head["xhi"]) // 2
        left = dict(head, xhi=mid, cost=head["cost"] // 2)
        right = dict(head, xlo=mid + 1, cost=head["cost"] - head["cost"] // 2)
        pieces = [left, right] + pieces[1:]
    pieces.sort(key=_unit_order_key)
    groups: List[List[Dict[str, Any]]] = [
        [] for _ in range(min(n_chunks, max(len(pieces), 1)))
    ]
    loads = [0] * len(groups)
    order = sorted(range(len(pieces)), key=lambda i: (-pieces[i]["cost"], i))
    for i in order:
        g = loads.index(min(loads))
        groups[g].append(pieces[i])
        loads[g] += max(pieces[i]["cost"], 1)
    for g in groups:
        g.sort(key=_unit_order_key)
    return groups


def run_chunk(cfg_dict: Dict[str, Any],
              units: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
    """Run one chunk; a pure function of (config, units), process-safe."""
    cfg = SearchConfig.from_dict(cfg_dict)
    acc: Dict[Tuple, Dict[str, Any]] = {}
    for unit in units:
        _UNIT_RUNNERS[unit["kind"]](cfg, unit, acc)
    return sorted(acc.values(), key=_record_sort_key)


def _run_chunk_task(args: Tuple[int, Dict[str, Any], List[Dict[str, Any]]]):
    idx, cfg_dict, units = args
    return idx, run_chunk(cfg_dict, units)


CHECKPOINT_FORMAT = "fcspread-checkpoint"


class CheckpointMismatch(ValueError):
    """Checkpoint file does not fit this run (format or config digest)."""


def _checkpoint_cursor(done: Dict[str, Any], total: int) -> int:
    cur = -1
    while cur + 1 < total and str(cur + 1) in done:
        cur += 1
    return cur


def save_checkpoint(path: str, state: Dict[str, Any]) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(canon_json(state))
    os.replace(tmp, path)


def load_checkpoint(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        state = json.load(fh)
    if (
        state.get("format") != CHECKPOINT_FORMAT
        or state.get("version") != FORMAT_VERSION
    ):
        raise CheckpointMismatch(f"unrecognized checkpoint format in {path}")
    return state


@dataclass
class RunResult:
    records: List[Dict[str, Any]]
    chunks_total: int
    chunks_run: int
    completed: bool
    config: SearchConfig
    candidates: int = 0  # per-chunk records before the dedup merge


def merge_records(
    chunk_results: Sequence[Sequence[Dict[str, Any]]]
) -> List[Dict[str, Any]]:
    acc: Dict[Tuple, Dict[str, Any]] = {}
    for records in chunk_results:
        for rec in records:
            _merge_into(acc, json.loads(canon_json(rec)))
    return sorted(acc.values(), key=_record_sort_key)


def run_chunked(
    cfg: SearchConfig,
    n_chunks: int = 1,
    checkpoint_path: Optional[str] = None,
    resume: bool = False,
    threads: int = 1,
    max_chunks: Optional[int] = None,
) -> RunResult:
    """Run a search over a deterministic chunk plan with checkpointing.

    `max_chunks` bounds how many pending chunks run in this call (used to
    exercise interruption); the merged record list after completion is
    independent of n_chunks, threads and interruptions in between.
    """
    cfg.validate()
    digest = cfg.digest()
    state: Dict[str, Any] = {
        "format": CHECKPOINT_FORMAT,
        "version": FORMAT_VERSION,
        "config_digest": digest,
        "config": cfg.semantic_dict(),
        "n_chunks": n_chunks,
        "done": {},
        "cursor": -1,
        "chunks_total": None,
    }
    if resume:
        if not checkpoint_path:
            raise ValueError("resume requires a checkpoint path")
        state = load_checkpoint(checkpoint_path)
        if state["config_digest"] != digest:
            raise CheckpointMismatch(
                "checkpoint config digest mismatch: "
                f"{state['config_digest']} != {digest}"
            )
        n_chunks = state["n_chunks"]
    plan = plan_chunks(cfg, n_chunks)
    state["chunks_total"] = len(plan)
    done: Dict[str, List[Dict[str, Any]]] = state["done"]
    pending = [i for i in range(len(plan)) if str(i) not in done]
    to_run = pending if max_chunks is None else pending[:max_chunks]
    cfg_dict = cfg.semantic_dict()

    def note(idx: int, records: List[Dict[str, Any]]) -> None:
        done[str(idx)] = records
        state["cursor"] = _checkpoint_cursor(done, len(plan))
        if checkpoint_path:
            save_checkpoint(checkpoint_path, state)

    if threads > 1 and len(to_run) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for idx, records in pool.map(
                _run_chunk_task, [(i, cfg_dict, plan[i]) for i in to_run]
            ):
                note(idx, records)
    else:
        for i in to_run:
            note(i, run_chunk(cfg_dict, plan[i]))
    completed = len(done) == len(plan)
    records = (
        merge_records([done[k] for k in sorted(done, key=int)]) if completed else []
    )
    return RunResult(
        records=records,
        chunks_total=len(plan),
        chunks_run=len(to_run),
        completed=completed,
        config=cfg,
        candidates=sum(len(v) for v in done.values()),
    )


# ---------------------------------------------------------------------------
# Public search entry points


def search_fermat_catalan(cfg: SearchConfig, threads: int = 1) -> List[SolutionRecord]:
    """Exhaustive fermat-catalan search below 2**cfg.max_bits."""
    if cfg.mode != "fermat-catalan":
        raise ValueError("config mode must be fermat-catalan")
    res = run_chunked(cfg, n_chunks=max(1, threads), threads=threads)
    return [SolutionRecord(r) for r in res.records]


def search_product_target(cfg: SearchConfig, threads: int = 1) -> List[SolutionRecord]:
    """Search a product-target mode (gbtz/nonmaxgcd3/fp/maxgcd-spread1)."""
    if cfg.mode not in ("gbtz", "nonmaxgcd3", "fp", "maxgcd-spread1"):
        raise ValueError(f"not a product-target mode: {cfg.mode}")
    res = run_chunked(cfg, n_chunks=max(1, threads), threads=threads)
    return [SolutionRecord(r) for r in res.records]


def search_pillai_products(difference: int, cfg: Optional[SearchConfig] = None,
                           **overrides: Any) -> List[SolutionRecord]:
    """Pairs of bounded-spread products at the given difference."""
    if cfg is None:
        cfg = make_config("pillai", difference=difference, **overrides)
    elif cfg.difference != difference:
        raise ValueError("difference argument disagrees with config")
    res = run_chunked(cfg)
    return [SolutionRecord(r) for r in res.records]


def survey_combinations(cfg: SearchConfig) -> Dict[Tuple[int, int, int], int]:
    """Count non-maxgcd weight-admissible solutions per (n, m, d) cell."""
    if cfg.mode != "survey":
        raise ValueError("config mode must be survey")
    res = run_chunked(cfg)
    return {tuple(r["cell"]): r["count"] for r in res.records}


# ---------------------------------------------------------------------------
# Record verification (shared by tests and the log verifier)


def verify_record(rec: Dict[str, Any], cfg: SearchConfig) -> List[str]:
    """Re-derive every claim in a record; returns a list of problems."""
    problems: List[str] = []

    def check(ok: bool, msg: str) -> None:
        if not ok:
            problems.append(msg)

    M = cfg.max_value
    mode = rec.get("mode")
    if mode == "survey":
        check(len(rec["solutions"]) == rec["count"], "count != len(solutions)")
        n, m, d = rec["cell"]
        for sol in rec["solutions"]:
            check(sol["d"] == d, "solution degree disagrees with cell")
            check([n, m] in sol["assignments"] or [m, n] in sol["assignments"],
                  "solution exponents disagree with cell")
            problems.extend(
                _verify_product_core(sol, cfg, prefix=f"cell {rec['cell']}: ")
            )
        return problems
    if mode == "fermat-catalan":
        vx, vy, vz = rec["values"]
        A, B, C = rec["coeffs"]
        check(list(cfg.coeffs) == [A, B, C], "coefficients disagree with config")
        check(A * vx + B * vy == C * vz, "identity fails")
        check(max(vx, vy, vz) <= M, "term above bound")
        for v, reps in zip((vx, vy, vz), rec["reps"]):
            check((v == 1) == (reps == []), "wildcard flagged wrong")
            for b, e in reps:
                check(b**e == v, f"rep {b}^{e} != {v}")
                check(max(2, cfg.min_exp) <= e <= cfg.max_exp,
                      "rep exponent outside range")
        check(
            math.gcd(vx, vy) == 1 and math.gcd(vx, vz) == 1
            and math.gcd(vy, vz) == 1,
            "terms not coprime",
        )
        w = Fraction(0)
        nonwild = []
        for v, e, reps in zip((vx, vy, vz), rec["assignment"], rec["reps"]):
            if v == 1:
                check(e == 0, "wildcard exponent must be 0")
                continue
            check(any(ee == e for _, ee in reps), "assignment not among reps")
            if e < 2:
                check(False, f"bad assigned exponent {e}")
                continue
            w += Fraction(1, e)
            nonwild.append(e)
        check(_weight_ok(cfg, w), "assignment weight over bound")
        check(str(w) == rec["weight"], "stored weight mismatch")
        check(not nonwild or min(nonwild) <= cfg.min_exp_cap,
              "smallest exponent over cap")
        return problems
    if mode == "pillai":
        X, Z = rec["x"], rec["z"]
        check(Z - X == rec["difference"] == cfg.difference, "difference mismatch")
        check(1 <= X and Z <= M, "value out of bounds")
        xdec, zdec = analyze(rec["x_witness"]), analyze(rec["z_witness"])
        check(xdec.value == X and zdec.value == Z, "witness product mismatch")
        lo, hi = _pillai_degree_range(cfg)
        s_cap = cfg.max_spread if cfg.max_spread is not None else 0
        for dec in (xdec, zdec):
            check(lo <= dec.degree <= hi, "witness degree outside range")
            check(dec.spread <= s_cap, "witness spread over cap")
            if cfg.m_bound is not None:
                check(dec.spread_sq_over_base() <= cfg.m_bound,
                      "spread^2/base over bound")
        w = xdec.weight + zdec.weight
        check(_weight_ok(cfg, w), "pair weight over bound")
        check(str(w) == rec["weight"], "stored weight mismatch")
        return problems
    if mode in ("gbtz", "nonmaxgcd3", "fp", "maxgcd-spread1"):
        return _verify_product_core(rec, cfg)
    problems.append(f"unknown mode {mode!r}")
    return problems


def _verify_product_core(rec: Dict[str, Any], cfg: SearchConfig,
                         prefix: str = "") -> List[str]:
    problems: List[str] = []

    def check(ok: bool, msg: str) -> None:
        if not ok:
            problems.append(prefix + msg)

    M = cfg.max_value
    P, Q, Z, d = rec["p"], rec["q"], rec["z"], rec["d"]
    sign = rec["sign"]
    check(max(P, Q, Z) <= M and min(P, Q, Z) >= 1, "value out of bounds")
    check(P + Q == Z if sign == "plus" else P - Q == Z, "identity fails")
    g = math.gcd(P, Q)
    check(rec["gcd"] == g, "stored gcd wrong")
    check(rec["maxgcd"] == (g == min(P, Q)), "maxgcd flag wrong")
    check(rec["coprime"] == (g == 1), "coprime flag wrong")
    mode = cfg.mode
    if mode == "survey":
        check(g != min(P, Q), "survey requires non-maxgcd pairs")
        check(d > 2, "survey degree must exceed 2")
    else:
        check(P >= Q, "terms not in canonical order")
    if mode == "gbtz":
        check(g == 1, "gbtz requires coprime terms")
        check(cfg.degree[0] <= d <= cfg.degree[1], "degree outside range")
    elif mode == "nonmaxgcd3":
        check(g != min(P, Q), "nonmaxgcd3 requires non-maxgcd pairs")
        check(d == 3, "nonmaxgcd3 degree must be 3")
    elif mode == "fp":
        check(g != min(P, Q), "fp requires non-maxgcd pairs")
    elif mode == "maxgcd-spread1":
        check(g == min(P, Q), "mode requires maxgcd pairs")
    floor_s = 1 if mode == "nonmaxgcd3" else 0
    caps = {}
    for n, m in rec["assignments"]:
        rn, exact_n = arith.iroot(P, n)
        rm, exact_m = arith.iroot(Q, m)
        check(exact_n and exact_m, f"assignment ({n},{m}) is not a power pair")
        if mode in ("fp", "maxgcd-spread1"):
            check(n == m == d, "mode requires matching exponents and degree")
        if mode == "gbtz":
            check(d <= min(n, m), "degree above smallest exponent")
        structural = 1 if mode == "maxgcd-spread1" else _spread_cap(
            n, m, d, cfg.f_bound, cfg.f_strict
        )
        caps[(n, m)] = _clamp_spread(cfg, structural)
    check(rec["witness"] == rec["witnesses"][0] == min(rec["witnesses"]),
          "canonical witness is not the lexicographic minimum")
    best = None
    for factors in rec["witnesses"]:
        wdec = analyze(factors)
        check(wdec.value == Z, "witness product mismatch")
        check(wdec.degree == d, "witness degree mismatch")
        check(wdec.spread >= floor_s, "witness under the spread floor")
        ok_pairs = [nm for nm, cap in caps.items() if wdec.spread <= cap]
        check(ok_pairs != [], "witness admitted by no assignment")
        for n, m in ok_pairs:
            w = Fraction(1, n) + Fraction(1, m) + wdec.weight
            if best is None or w < best:
                best = w
    check(best is not None and str(best) == rec["weight"],
          "stored weight mismatch")
    if mode == "maxgcd-spread1":
        n = rec["assignments"][0][0]
        x, y = arith.iroot(P, n)[0], arith.iroot(Q, n)[0]
        st = families.is_standard(x, y, n, Z, sign)
        stored = rec.get("standard")
        check(
            (st is False and stored is False)
            or (st is not False and stored == list(st)),
            "standard flag wrong",
        )
    return problems


# ---------------------------------------------------------------------------
# Expected findings per mode (drives exit codes)


def expected_fc_triples(cfg: SearchConfig) -> List[Tuple[int, int, int]]:
    """Catalog triples findable under this config (plain coefficients)."""
    out = []
    for sol in families.fermat_catalan_catalog():
        vals = [v for v, _ in sol.terms]
        acc: Dict[Tuple, Dict[str, Any]] = {}
        _fc_candidate(cfg, vals[0], vals[1], vals[2], acc)
        if acc:
            a, b = sorted(vals[:2])
            out.append((a, b, vals[2]))
    return sorted(out)


def expected_degree3_triples(cfg: SearchConfig) -> List[Tuple[int, int, int]]:
    out = []
    for sol in families.degree3_catalog():
        vals = [v for v, _ in sol.terms]
        if max(vals) <= cfg.max_value:
            out.append((vals[0], vals[1], vals[2]))
    return sorted(out)


def expectation_report(cfg: SearchConfig,
                       records: List[Dict[str, Any]]) -> Tuple[bool, str]:
    """(expectation met, human summary) for a completed run."""
    if cfg.mode == "fermat-catalan":
        if cfg.coeffs != (1, 1, 1):
            return True, f"{len(records)} records (no catalog for coefficients)"
        found = sorted(tuple(r["values"]) for r in records)
        want = expected_fc_triples(cfg)
        ok = found == want
        return ok, (
            f"found {len(found)} solutions, catalog predicts {len(want)}"
            + ("" if ok else " (MISMATCH)")
        )
    if cfg.mode == "nonmaxgcd3":
        found = sorted({(r["p"], r["q"], r["z"]) for r in records})
        want = expected_degree3_triples(cfg)
        ok = found == want
        return ok, (
            f"found {len(found)} solutions, catalog predicts {len(want)}"
            + ("" if ok else " (MISMATCH)")
        )
    if cfg.mode in ("gbtz", "fp"):
        ok = not records
        return ok, f"{len(records)} counterexample records (expected 0)"
    if cfg.mode == "maxgcd-spread1":
        bad = [r for r in records if not r.get("standard")]
        ok = not bad
        return ok, (
            f"{len(records)} records, {len(bad)} non-standard "
            "(expected all standard)"
        )
    return True, f"{len(records)} records"

"""Append-only JSONL cache for computed E and P polynomials.

One record per line: {"kind": "E"|"P", "key": text, "N": int,
"value": ...}.  E records store the polynomial; P records store the
polynomial together with the recorded normalization constant.  Appends
take an exclusive lock so concurrent workers can share one file.
"""

from __future__ import annotations

import fcntl
import json
import os

from .qt import QTScalar
from .render import xpoly_from_json, xpoly_to_json
from .sparts import eigenvalue, format_spart, parse_spart
from . import macdonald

ENV_VAR = "BIMAC_CACHE"


def cache_path(explicit=None):
    return explicit or os.environ.get(ENV_VAR)


def _eta_text(eta):
    return ",".join(str(x) for x in eta)


def load(path) -> int:
    """Populate the in-process caches from a JSONL file."""
    if not path or not os.path.exists(path):
        return 0
    count = 0
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            N = int(rec["N"])
            if rec["kind"] == "E":
                eta = tuple(int(x) for x in rec["key"].split(","))
                poly = xpoly_from_json(rec["value"])
                elem = macdonald.EBasisElement(
                    eta=eta, poly=poly,
                    eigenvalues=tuple(eigenvalue(eta, i)
                                      for i in range(1, N + 1)))
                macdonald._E_CACHE.setdefault(eta, elem)
            elif rec["kind"] == "P":
                lam = parse_spart(rec["key"], N)
                poly = xpoly_from_json(rec["value"]["poly"])
                c = QTScalar.from_json(rec["value"]["c"])
                elem = macdonald.PBasisElement(lam=lam, poly=poly, c_lam=c)
                macdonald._P_CACHE.setdefault((lam.anti, lam.sym, lam.N), elem)
            count += 1
    return count


def append_E(path, elem) -> None:
    _append(path, {"kind": "E", "key": _eta_text(elem.eta),
                   "N": elem.poly.nvars,
                   "value": xpoly_to_json(elem.poly)})


def append_P(path, elem) -> None:
    _append(path, {"kind": "P", "key": format_spart(elem.lam),
                   "N": elem.lam.N,
                   "value": {"poly": xpoly_to_json(elem.poly),
                             "c": elem.c_lam.to_json()}})


def _append(path, record) -> None:
    line = json.dumps(record, sort_keys=True)
    with open(path, "a", encoding="utf-8") as fh:
        fcntl.flock(fh.fileno(), fcntl.LOCK_EX)
        try:
            fh.write(line + "\n")
            fh.flush()
        finally:
            fcntl.flock(fh.fileno(), fcntl.LOCK_UN)


def dump_all(path) -> int:
    """Append every in-process E and P entry to the file."""
    count = 0
    for elem in list(macdonald._E_CACHE.values()):
        append_E(path, elem)
        count += 1
    for elem in list(macdonald._P_CACHE.values()):
        append_P(path, elem)
        count += 1
    return count

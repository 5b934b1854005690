"""Text, LaTeX and JSON rendering of polynomials and expansions."""

from __future__ import annotations

from .qt import QTScalar, format_scalar
from .xpoly import XPolynomial


def _x_text(e, latex: bool) -> str:
    parts = []
    for i, k in enumerate(e):
        if not k:
            continue
        if latex:
            parts.append("x_{%d}" % (i + 1) if k == 1
                         else "x_{%d}^{%d}" % (i + 1, k))
        else:
            parts.append(f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}")
    return ("" if latex else "*").join(parts)


def format_xpoly(f: XPolynomial, latex: bool = False) -> str:
    if f.is_zero():
        return "0"
    chunks = []
    for e, c in f.sorted_terms():
        mono = _x_text(e, latex)
        cs = format_scalar(c, latex)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if mono and cs == "1":
            body = mono
        elif not mono:
            body = cs if not _needs_parens(c) else f"({cs})" if not latex else cs
        else:
            if _needs_parens(c):
                body = (cs if latex and cs.startswith("\\frac")
                        else f"({cs})") + (" " if latex else "*") + mono
            else:
                body = cs + (" " if latex else "*") + mono
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def _needs_parens(c: QTScalar) -> bool:
    return len(c.num.terms) > 1 or not c.den.is_one()


def certificate_to_json(cert) -> dict:
    """All fields of a strip certificate, JSON-serializable."""
    from .sparts import format_spart
    return {
        "lam": format_spart(cert.lam),
        "omg": format_spart(cert.omg),
        "N": cert.lam.N,
        "rows_filled": sorted(cert.rows_filled),
        "rows_circled_square": sorted(cert.rows_circled_square),
        "rows_new_circle": sorted(cert.rows_new_circle),
        "rows_kept_circle": sorted(cert.rows_kept_circle),
        "w": list(cert.w),
        "sigma_tilde": list(cert.sigma_tilde),
        "sigma": list(cert.sigma),
        "J_tilde": sorted(cert.J_tilde),
        "J": sorted(cert.J),
        "L": sorted(cert.L),
        "strip_type": cert.strip_type,
        "r": cert.r,
    }


def diagram_latex(lam) -> str:
    """The diagram of a superpartition with square and circle marks."""
    star = lam.star()
    circ = lam.circled()
    rows = []
    for i in range(lam.N):
        cells = ["\\square"] * star[i]
        if circ[i] == star[i] + 1:
            cells.append("\\bigcirc")
        if cells:
            rows.append(" & ".join(cells))
    body = " \\\\\n".join(rows)
    return "\\begin{matrix}\n%s\n\\end{matrix}" % body


def xpoly_to_json(f: XPolynomial) -> dict:
    return {"N": f.nvars,
            "terms": [{"x": list(e), "coeff": c.to_json()}
                      for e, c in f.sorted_terms()]}


def xpoly_from_json(obj) -> XPolynomial:
    terms = {}
    for item in obj["terms"]:
        terms[tuple(int(v) for v in item["x"])] = QTScalar.from_json(item["coeff"])
    return XPolynomial(int(obj["N"]), terms)

"""One-stop property report for a simplicial complex."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .complex import SimplicialComplex, face_census, is_pure
from .decide import is_shellable, is_vertex_decomposable
from .homology import RATIONALS, Field, cohen_macaulay_witness, sequential_cm_witness

ALL_CHECKS = ("vd", "shell", "cm", "scm")


@dataclass
class PropertyReport:
    dim: Optional[int]
    f_vector: list[int]
    pure: bool
    vd: Optional[bool] = None
    vd_certificate: Optional[list] = None
    shellable: Optional[str] = None
    shelling_order: Optional[list] = None
    cm_by_field: dict = field(default_factory=dict)
    cm_witness: dict = field(default_factory=dict)
    scm_by_field: dict = field(default_factory=dict)
    scm_witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "dim": "void" if self.dim is None else self.dim,
            "f_vector": self.f_vector,
            "pure": self.pure,
        }
        if self.vd is not None:
            out["vd"] = self.vd
            out["vd_certificate"] = self.vd_certificate
        if self.shellable is not None:
            out["shellable"] = self.shellable
            out["shelling_order"] = self.shelling_order
        if self.cm_by_field:
            out["cm_by_field"] = self.cm_by_field
            out["cm_witness"] = self.cm_witness
        if self.scm_by_field:
            out["scm_by_field"] = self.scm_by_field
            out["scm_witness"] = self.scm_witness
        return out


def analyze(cx: SimplicialComplex, checks: Iterable[str] = ALL_CHECKS,
            fields: Iterable[Field] = (RATIONALS,), shell_budget: Optional[int] = None) -> PropertyReport:
    """Census plus the requested checks; the void complex only gets the census."""
    dim, fv = face_census(cx)
    rep = PropertyReport(dim, fv, is_pure(cx))
    if cx.is_void:
        return rep
    checks = set(checks)
    fields = list(fields)
    if "vd" in checks:
        rep.vd, rep.vd_certificate = is_vertex_decomposable(cx)
    if "shell" in checks:
        rep.shellable, rep.shelling_order = is_shellable(cx, shell_budget)
    for k in fields:
        name = str(k)
        if "cm" in checks:
            w = cohen_macaulay_witness(cx, k)
            rep.cm_by_field[name] = w is None
            rep.cm_witness[name] = None if w is None else {"face": w[0], "degree": w[1]}
        if "scm" in checks:
            w = sequential_cm_witness(cx, k)
            rep.scm_by_field[name] = w is None
            rep.scm_witness[name] = w
    return rep

"""응답 스키마의 사람이 읽는 텍스트 렌더링"""
from functools import singledispatch
from typing import List, Sequence

from pydantic import BaseModel

from src.presentation.schemas.reports import (
    ClassifyResponse,
    CliquesResponse,
    CompareResponse,
    GrowthResponse,
    KTheoryResponse,
    ReproduceResponse,
    VerifyResponse,
)


def _clique_label(vertices: Sequence[str]) -> str:
    return "{" + ",".join(vertices) + "}"


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [max(len(str(cell)) for cell in column) for column in zip(header, *rows)]
    lines = ["  ".join(str(cell).ljust(w) for cell, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)
    return lines


@singledispatch
def render_text(response: BaseModel) -> str:
    """알 수 없는 응답은 JSON 으로"""
    return response.model_dump_json(indent=2)


@render_text.register
def _(response: CliquesResponse) -> str:
    lines = [f"vertices: {' '.join(response.vertices) or '(none)'}"]
    lines.append(f"cliques ({response.count}, recursive count {response.recursive_count}):")
    lines.extend(f"  {_clique_label(c)}" for c in response.cliques)
    lines.append(f"max clique size: {response.max_clique_size}")
    lines.append(f"counts by size: {response.counts_by_size}")
    lines.append(f"irreducible: {'yes' if response.irreducible else 'no'}")
    return "\n".join(lines)


@render_text.register
def _(response: KTheoryResponse) -> str:
    lines = [f"K_0 = Z^{response.rank}, K_1 = {response.k1 or 0}"]
    lines.append("q: " + ", ".join(f"{k}={v}" for k, v in response.q.items()))
    rows = [
        [str(i), _clique_label(basis), value + ("  [1]" if i == response.unit_index else "")]
        for i, (basis, value) in enumerate(zip(response.basis, response.pairing))
    ]
    lines.extend(_table(["#", "clique", "tau"], rows))
    lines.append("pairing: (" + ", ".join(response.pairing) + ")")
    lines.append(f"trace image: ({response.trace_image})Z")
    return "\n".join(lines)


@render_text.register
def _(response: CompareResponse) -> str:
    lines = [f"verdict: {response.verdict}", f"reason: {response.reason}"]
    for i, (rank, image, pairing) in enumerate(zip(response.ranks, response.trace_images, response.pairings), 1):
        lines.append(f"graph {i}: rank {rank}, image ({image})Z, pairing ({', '.join(pairing)})")
    return "\n".join(lines)


@render_text.register
def _(response: ClassifyResponse) -> str:
    lines = [
        f"n = {response.n}",
        f"q1 = {response.q1}: {response.regime1}, order {response.order1}",
        f"q2 = {response.q2}: {response.regime2}, order {response.order2}",
        f"verdict: {response.verdict}",
    ]
    if response.thickness is not None:
        rows = [[str(t.d), t.q, str(t.order)] for t in response.thickness]
        lines.extend(_table(["d", "q", "order"], rows))
    return "\n".join(lines)


@render_text.register
def _(response: GrowthResponse) -> str:
    rows = [[str(k), str(s)] for k, s in enumerate(response.growth)]
    lines = _table(["k", "s_k"], rows)
    lines.append(f"total: {response.total}")
    return "\n".join(lines)


@render_text.register
def _(response: VerifyResponse) -> str:
    relations = response.relations
    lines = [
        f"ball dimension: {response.dimension} (L = {relations.radius}, exact = {relations.exact})",
        f"involution   {relations.involution:.3e}",
        f"symmetry     {relations.symmetry:.3e}",
        f"commutation  {relations.commutation:.3e}",
        f"unitarity    {relations.unitarity:.3e}",
    ]
    rows = [[t.label, f"{t.computed:.15f}", t.target, f"{t.error:.3e}"] for t in response.traces]
    lines.extend(_table(["clique", "tau(p_C)", "target", "error"], rows))
    rows = [[t.label, f"{t.computed:.15f}", t.target, f"{t.error:.3e}"] for t in response.complementary_traces]
    lines.extend(_table(["s", "tau((1-l)/2)", "target", "error"], rows))
    lines.append(f"eta residual: {response.eigenvector.residual:.3e}")
    if response.series:
        rows = [
            [str(r.radius), f"{r.t_estimate:.10f}", r.t_target, f"{r.phi_estimate:.10f}", r.phi_target,
             "ok" if r.passed else "FAIL"]
            for r in response.series
        ]
        lines.extend(_table(["L", "t", "t target", "phi", "phi target", ""], rows))
    lines.append("PASS" if response.passed else "FAIL")
    return "\n".join(lines)


@render_text.register
def _(response: ReproduceResponse) -> str:
    rows = [[str(c.id), c.name, "PASS" if c.passed else "FAIL", c.detail] for c in response.criteria]
    lines = _table(["#", "criterion", "result", "detail"], rows)
    lines.append("all passed" if response.passed else "FAILED")
    return "\n".join(lines)

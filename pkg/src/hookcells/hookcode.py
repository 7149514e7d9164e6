"""Difference-one hook codes and the product lattice of boxed partitions."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .errors import BoxOverflow, ParseError
from .hilbert import HilbertFunction, boxes
from .partitions import Partition, enumerate_partitions, hands, row_hook_count


@dataclass(frozen=True, order=True)
class CodeBlock:
    """Parts of one block; length is the box height, zeros included."""

    degree: int
    parts: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def runs(self) -> tuple[tuple[int, int], ...]:
        """Run-length encoding ``((h_1, l_1), ..., (h_n, l_n))``, h strictly decreasing."""
        out: list[list[int]] = []
        for h in self.parts:
            if out and out[-1][0] == h:
                out[-1][1] += 1
            else:
                out.append([h, 1])
        return tuple((h, l) for h, l in out)

    def __str__(self):
        return f"({','.join(map(str, self.parts))})_{self.degree}"


@dataclass(frozen=True, order=True)
class HookCode:
    blocks: tuple[CodeBlock, ...]

    @property
    def size(self) -> int:
        return sum(b.size for b in self.blocks)

    def block(self, degree: int) -> CodeBlock:
        for b in self.blocks:
            if b.degree == degree:
                return b
        raise KeyError(degree)

    def __str__(self):
        return ",".join(str(b) for b in self.blocks)

    def to_text(self) -> str:
        return ";".join(f"{b.degree}:{','.join(map(str, b.parts))}" for b in self.blocks)

    def to_json(self):
        return [{"degree": b.degree, "parts": list(b.parts)} for b in self.blocks]

    @classmethod
    def from_json(cls, data) -> "HookCode":
        return cls(tuple(CodeBlock(int(b["degree"]), tuple(b["parts"])) for b in data))

    @classmethod
    def of(cls, *blocks) -> "HookCode":
        """``HookCode.of((4, (1,)), (5, (2, 1)))``."""
        return cls(tuple(CodeBlock(i, tuple(p)) for i, p in blocks))


_BLOCK = re.compile(r"\s*(\d+)\s*:\s*([\d,\s]*)$")


def parse_code(text: str) -> HookCode:
    """Parse ``"4:1;5:2,1"``."""
    blocks = []
    pos = 0
    for tok in text.split(";"):
        m = _BLOCK.match(tok)
        if not m:
            raise ParseError(f"bad code block {tok!r}", pos)
        body = m.group(2).strip()
        parts = tuple(int(v) for v in body.split(",")) if body else ()
        blocks.append(CodeBlock(int(m.group(1)), parts))
        pos += len(tok) + 1
    return HookCode(tuple(blocks))


def hook_code(P: Partition) -> HookCode:
    T = P.T
    blocks = []
    for i in T.block_degrees():
        n = T.delta(i + 1)
        hs = hands(P, i)[:n]
        blocks.append(CodeBlock(i, tuple(row_hook_count(P, h.ydeg) for h in hs)))
    return HookCode(tuple(blocks))


def check_fits(Q: HookCode, T: HilbertFunction) -> None:
    bx = boxes(T)
    if len(bx) != len(Q.blocks):
        raise BoxOverflow(f"code has {len(Q.blocks)} blocks, T has {len(bx)}")
    for b, box in zip(Q.blocks, bx):
        if b.degree != box.degree or len(b.parts) != box.height:
            raise BoxOverflow(f"block {b} does not match box {box}")
        if any(p < 0 or p > box.width for p in b.parts):
            raise BoxOverflow(f"block {b} exceeds width {box.width}")
        if any(b.parts[k] < b.parts[k + 1] for k in range(len(b.parts) - 1)):
            raise BoxOverflow(f"block {b} is not a partition")


def complement(Q: HookCode, T: HilbertFunction) -> HookCode:
    check_fits(Q, T)
    out = []
    for b, box in zip(Q.blocks, boxes(T)):
        out.append(CodeBlock(b.degree, tuple(box.width - p for p in reversed(b.parts))))
    return HookCode(tuple(out))


def _box_partitions(height, width):
    return [tuple(c) for c in combinations_with_replacement(range(width, -1, -1), height)]


def enumerate_codes(T: HilbertFunction) -> tuple[HookCode, ...]:
    bx = boxes(T)
    per = [[CodeBlock(b.degree, parts) for parts in _box_partitions(b.height, b.width)] for b in bx]
    return tuple(HookCode(tuple(c)) for c in product(*per))


def max_code(T: HilbertFunction) -> HookCode:
    return HookCode(tuple(CodeBlock(b.degree, (b.width,) * b.height) for b in boxes(T)))


@lru_cache(maxsize=256)
def _code_table(values) -> dict:
    T = HilbertFunction(values)
    return {hook_code(P): P for P in enumerate_partitions(T)}


def partition_from_code(Q: HookCode, T: HilbertFunction) -> Partition:
    """Inverse of :func:`hook_code` on ``P(T)``, by table lookup."""
    check_fits(Q, T)
    return _code_table(T.values)[Q]


def covers(Q: HookCode):
    """Codes obtained from Q by deleting one removable box."""
    for bi, b in enumerate(Q.blocks):
        parts = b.parts
        for k, p in enumerate(parts):
            nxt = parts[k + 1] if k + 1 < len(parts) else 0
            if p > nxt:
                new = parts[:k] + (p - 1,) + parts[k + 1:]
                blocks = Q.blocks[:bi] + (CodeBlock(b.degree, new),) + Q.blocks[bi + 1:]
                yield HookCode(blocks)


def hasse_diagram(T: HilbertFunction) -> set[tuple[HookCode, HookCode]]:
    """Cover relations, directed from the larger code to the smaller."""
    return {(Q, R) for Q in enumerate_codes(T) for R in covers(Q)}


def leq(Q: HookCode, R: HookCode) -> bool:
    """Product order: blockwise containment of diagrams."""
    return all(
        all(a <= b for a, b in zip(qb.parts, rb.parts))
        for qb, rb in zip(Q.blocks, R.blocks)
    )

"""Semi-dynamic range-max structure for the DP diagonals.

Construction: values go into a 2d-min-heap (parent of node i is the
nearest earlier index with a strictly smaller value), the heap is
linearized lazily as an Euler tour whose arrays E (nodes) and D (depths)
only ever grow at the end, and range minima reduce to a ±1 RMQ on D via
the first-occurrence table Y.  Max semantics come from negating values on
the way in.

The ±1 RMQ breaks depth ties by picking the rightmost minimum.  That is
load-bearing: the answer for a range whose LCA lies outside it is read as
the Euler successor E[p+1], and only the LCA's *last* visit inside the
window is followed by the child subtree that contains the range minimum.
Earlier visits are followed by intermediate siblings with larger values.
"""

from __future__ import annotations

from array import array

_VIRTUAL_MIN = -(1 << 31)  # value of the virtual root; callers must stay above it

# in-block lookup tables, shared by every instance, keyed (block_size, step mask)
_block_tables: dict = {}


def _in_block_table(size: int, mask: int):
    """table[a][b] = offset of the rightmost minimum of the ±1 profile on [a, b].

    Bit s of mask is 1 when the step from offset s to s+1 goes up.  t[a][b]
    only depends on bits a..b-1, so masks of partially filled blocks (high
    bits zero) are safe to look up as long as b stays within the fill.
    """
    key = (size, mask)
    table = _block_tables.get(key)
    if table is None:
        depth = [0] * size
        for s in range(size - 1):
            depth[s + 1] = depth[s] + (1 if mask >> s & 1 else -1)
        table = []
        for a in range(size):
            best, best_d = a, depth[a]
            row = [0] * size
            row[a] = a
            for b in range(a + 1, size):
                if depth[b] <= best_d:
                    best, best_d = b, depth[b]
                row[b] = best
            table.append(row)
        _block_tables[key] = table
    return table


class TwoDMinHeap:
    """Append-only 2d-min-heap with an incrementally extended Euler tour.

    Arrays (all 0-based, entry 0 is the virtual root with value -inf):
    values[i] = X[i]; euler/depth = Euler tour E/D; first[i] = Y[i].
    """

    __slots__ = ("values", "euler", "depth", "first", "count", "_path_nodes", "_path_vals")

    def __init__(self):
        self.values = array("i", [_VIRTUAL_MIN])
        self.euler = array("i", [0])
        self.depth = array("i", [0])
        self.first = array("i", [0])
        self.count = 0
        self._path_nodes = [0]  # rightmost path, root first
        self._path_vals = [_VIRTUAL_MIN]

    def append(self, x: int) -> None:
        """Attach node count+1 with value x; extends E and D only at the end."""
        nodes, vals = self._path_nodes, self._path_vals
        euler, depth = self.euler, self.depth
        while vals[-1] >= x:
            vals.pop()
            nodes.pop()
            euler.append(nodes[-1])  # revisit the exposed ancestor
            depth.append(len(nodes) - 1)
        t = self.count + 1
        self.count = t
        euler.append(t)
        depth.append(len(nodes))
        nodes.append(t)
        vals.append(x)
        self.values.append(x)
        self.first.append(len(euler) - 1)

    def parent(self, i: int) -> int:
        """Parent of node i; E holds it right before node i's first visit."""
        if not 1 <= i <= self.count:
            raise ValueError(f"node {i} out of range 1..{self.count}")
        return self.euler[self.first[i] - 1]


class PlusMinusOneRmq:
    """±1 RMQ over a growing depth array, rightmost minimum on ties.

    Reads the array it was constructed around (normally a TwoDMinHeap's
    depth array) and consumes new entries via extend().  Block minima plus
    an incremental sparse table give O(1) queries; when the array outgrows
    the planned capacity, capacity doubles and the tables are rebuilt for
    the new block size.
    """

    __slots__ = (
        "_d", "size", "capacity", "block_size",
        "_block_min_pos", "_block_masks", "_sparse",
        "_pb_start", "_pb_mask", "_pb_min", "_pb_min_pos",
    )

    def __init__(self, depths: array, capacity: int | None = None):
        self._d = depths
        self.capacity = capacity if capacity and capacity > 0 else 16
        self._reset_tables()
        self.extend()

    def _reset_tables(self):
        self.block_size = max(1, self.capacity.bit_length() // 2)
        self._block_min_pos = array("i")
        self._block_masks = array("i")
        self._sparse = [self._block_min_pos]  # level 0 aliases the block minima
        self._pb_start = 0
        self._pb_mask = 0
        self._pb_min = 0
        self._pb_min_pos = 0
        self.size = 0

    def extend(self) -> None:
        """Consume any entries appended to the depth array since last call."""
        limit = len(self._d)
        if limit <= self.size:
            return
        if limit > self.capacity:
            while self.capacity < limit:
                self.capacity *= 2
            self._reset_tables()  # new geometry: replay from scratch
        self._consume(limit)

    def _consume(self, limit: int) -> None:
        d = self._d
        bs = self.block_size
        size = self.size
        pb_start, pb_mask = self._pb_start, self._pb_mask
        pb_min, pb_min_pos = self._pb_min, self._pb_min_pos
        block_min_pos, block_masks = self._block_min_pos, self._block_masks
        sparse = self._sparse
        prev_v = d[size - 1] if size > 0 else 0
        while size < limit:
            v = d[size]
            off = size - pb_start
            if off == 0:
                pb_mask = 0
                pb_min = v
                pb_min_pos = size
            else:
                if prev_v < v:
                    pb_mask |= 1 << (off - 1)
                if v <= pb_min:  # <= keeps the rightmost minimum
                    pb_min = v
                    pb_min_pos = size
            size += 1
            prev_v = v
            if off == bs - 1:
                block_min_pos.append(pb_min_pos)
                block_masks.append(pb_mask)
                pb_start = size
                top = len(block_min_pos) - 1
                lev, width = 1, 2
                while width <= top + 1:
                    lo = top - width + 1
                    below = sparse[lev - 1]
                    p1 = below[lo]
                    p2 = below[lo + (width >> 1)]
                    if lev == len(sparse):
                        sparse.append(array("i"))
                    sparse[lev].append(p2 if d[p2] <= d[p1] else p1)
                    lev += 1
                    width <<= 1
        self.size = size
        self._pb_start, self._pb_mask = pb_start, pb_mask
        self._pb_min, self._pb_min_pos = pb_min, pb_min_pos

    def _in_block(self, block_idx: int, lo: int, hi: int) -> int:
        start = block_idx * self.block_size
        if start >= self._pb_start:
            mask = self._pb_mask  # partial block; hi stays within the fill
        else:
            mask = self._block_masks[block_idx]
        return start + _in_block_table(self.block_size, mask)[lo][hi]

    def query(self, a: int, b: int) -> int:
        """Index of the rightmost minimum of D[a..b] (inclusive, 0-based)."""
        if not 0 <= a <= b < self.size:
            raise ValueError(f"bad range [{a}, {b}] for size {self.size}")
        bs = self.block_size
        ba, bb = a // bs, b // bs
        if ba == bb:
            return self._in_block(ba, a - ba * bs, b - ba * bs)
        d = self._d
        best = self._in_block(ba, a - ba * bs, bs - 1)
        mid_blocks = bb - ba - 1
        if mid_blocks > 0:
            lev = mid_blocks.bit_length() - 1
            row = self._sparse[lev]
            p1 = row[ba + 1]
            p2 = row[bb - (1 << lev)]
            mid = p2 if d[p2] <= d[p1] else p1
            if d[mid] <= d[best]:
                best = mid
        right = self._in_block(bb, 0, b - bb * bs)
        if d[right] <= d[best]:
            best = right
        return best


def rmq_positions(heap: TwoDMinHeap, pm1: PlusMinusOneRmq, i1: int, i2: int) -> int:
    """Position of a minimum of X[i1..i2] (1-based node indices).

    Case split on the LCA: if the ±1 RMQ lands on an occurrence of i1, the
    range minimum is X[i1] itself; otherwise it is the value at the LCA's
    next Euler entry, the root of the child subtree containing i2.
    """
    if not 1 <= i1 <= i2 <= heap.count:
        raise ValueError(f"bad range [{i1}, {i2}] for {heap.count} nodes")
    pm1.extend()
    p = pm1.query(heap.first[i1], heap.first[i2])
    euler = heap.euler
    node = euler[p]
    return i1 if node == i1 else euler[p + 1]


class DiagonalMaxQueue:
    """Front-indexed range-max queue: prepend plus max over recent positions.

    Position 1 is the most recently prepended value.  Internally a prepend
    is an append into the min-structure over negated values; front
    position p maps to node count - p + 1.
    """

    __slots__ = ("heap", "pm1", "count")

    def __init__(self, capacity: int | None = None):
        self.heap = TwoDMinHeap()
        euler_cap = None if capacity is None else 2 * capacity + 1
        self.pm1 = PlusMinusOneRmq(self.heap.depth, capacity=euler_cap)
        self.count = 0

    def prepend(self, x: int) -> None:
        self.heap.append(-x)
        self.count += 1
        self.pm1.extend()

    def rmq_front(self, a: int, b: int) -> tuple:
        """(max value, front position achieving it) over front positions a..b."""
        count = self.count
        if not 1 <= a <= b <= count:
            raise ValueError(f"bad front range [{a}, {b}] for count {count}")
        p = rmq_positions(self.heap, self.pm1, count - b + 1, count - a + 1)
        return -self.heap.values[p], count - p + 1

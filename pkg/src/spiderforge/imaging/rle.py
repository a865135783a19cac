"""Rle – row-major, zeros-first run lengths of a binary mask."""


class Rle:
    __slots__ = ("counts",)

    def __init__(self, counts):
        counts = tuple(int(c) for c in counts)

        for c in counts:
            if c < 0:
                raise ValueError(f"run lengths must be non-negative, got {c}")

        self.counts = counts

    @property
    def total(self):
        return sum(self.counts)

    def is_canonical(self):
        if not self.counts:
            return False

        for i in range(1, len(self.counts)):
            if self.counts[i] == 0:
                return False

        return True

    def to_list(self):
        return list(self.counts)

    def __eq__(self, other):
        if not isinstance(other, Rle):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return f"Rle({list(self.counts)})"

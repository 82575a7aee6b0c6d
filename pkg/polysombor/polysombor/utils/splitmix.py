"""
SplitMix64: a 64-bit generator whose output depends only on the seed, so
seeded campaigns reproduce on every platform.
"""
MASK64 = (1 << 64) - 1

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB


class SplitMix64(object):
    __slots__ = ('state',)

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_2) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, n):
        """Uniform-ish integer in [0, n) by modulo."""
        if n < 1:
            raise ValueError("randbelow needs n >= 1, got {}".format(n))
        return self.next_u64() % n

    def choice(self, items):
        return items[self.randbelow(len(items))]

    @classmethod
    def for_instance(cls, seed, index):
        """Independent stream for instance ``index`` of a campaign seeded with ``seed``."""
        return cls(cls(seed + index).next_u64())

"""Words in a free group and free reduction.

A word is a tuple of non-zero integers: ``i`` stands for the ``i``-th generator
and ``-i`` for its inverse.
"""
import random

ALPHA, BETA, GAMMA = (1,), (2,), (3,)


def inverse(word):
    return tuple(-x for x in reversed(word))


def commutator(x, y):
    """``[x, y] = x y x^-1 y^-1``."""
    return tuple(x) + tuple(y) + inverse(x) + inverse(y)


def conjugate(x, y):
    """``x y x^-1``."""
    return tuple(x) + tuple(y) + inverse(x)


def reduce_word(word):
    stack = []
    for x in word:
        if x == 0:
            raise ValueError("0 is not a generator")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def reduce_word_randomly(word, rng=None):
    """Cancel adjacent inverse pairs in a random order until none is left."""
    rng = rng or random.Random()
    word = list(word)
    while True:
        spots = [i for i in range(len(word) - 1) if word[i] == -word[i + 1]]
        if not spots:
            return tuple(word)
        i = rng.choice(spots)
        del word[i:i + 2]


def ihx_word():
    """The Hall-Witt style product behind the IHX relation."""
    a, b, c = ALPHA, BETA, GAMMA
    return (
        commutator(conjugate(b, a), commutator(c, b))
        + commutator(conjugate(c, b), commutator(a, c))
        + commutator(conjugate(a, c), commutator(b, a))
    )


def free_group_identity_check():
    return len(reduce_word(ihx_word())) == 0


def format_word(word, names="abc"):
    return "".join(names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in word)

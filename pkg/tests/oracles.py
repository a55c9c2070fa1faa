"""Naive reference computations on the standard x/2, 3x+1 orbit.

Nothing here imports the package; these are the independent side of every
cross-check.
"""


def standard_orbit(n):
    out = [n]
    while n != 1:
        n = n // 2 if n % 2 == 0 else 3 * n + 1
        out.append(n)
    return out


def orbit_max(n):
    return max(standard_orbit(n))


def odd_iterates(n):
    """Odd members of the standard orbit in order, ending at 1."""
    return [m for m in standard_orbit(n) if m % 2 == 1]


def count_odd_steps(n):
    """3x+1 branches taken before reaching 1; 1 itself counts one (1 -> 4 -> 2 -> 1)."""
    if n == 1:
        return 1
    return sum(1 for m in standard_orbit(n)[:-1] if m % 2 == 1)


def valuation_by_division(m):
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    return e


def compressed(x):
    m = 3 * x + 1
    while m % 2 == 0:
        m //= 2
    return m


def brute_preimages(m, max_valuation):
    """Odd y with T(y) = m and valuation <= max_valuation by direct scan."""
    limit = m * 2**max_valuation
    return [y for y in range(1, limit + 1, 2)
            if compressed(y) == m and valuation_by_division(3 * y + 1) <= max_valuation]

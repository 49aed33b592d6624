"""Pure-Python kernels; same call signatures as the compiled ``_ckernels``.

Python integers never overflow, so these are also the safe path for
matrices whose permanents exceed int64.
"""


def permanent(rows):
    """Ryser's formula with Gray-code column updates."""
    n = len(rows)
    if n == 0:
        return 1
    return _ryser(rows, list(range(n)), list(range(n)))


def _ryser(rows, ridx, cidx):
    k = len(ridx)
    if k == 0:
        return 1
    sub = [[rows[i][j] for j in cidx] for i in ridx]
    rowsum = [0] * k
    total = 0
    gray = 0
    for g in range(1, 1 << k):
        j = (g & -g).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            for i in range(k):
                rowsum[i] += sub[i][j]
        else:
            for i in range(k):
                rowsum[i] -= sub[i][j]
        prod = 1
        for v in rowsum:
            prod *= v
            if not prod:
                break
        # subset size parity equals g parity
        if (k - g) & 1:
            total -= prod
        else:
            total += prod
    return total


def zeon_power(rows, subsets, r0=0, r1=None):
    """Rows ``r0:r1`` of the matrix of subpermanents indexed by ``subsets``."""
    if r1 is None:
        r1 = len(subsets)
    return [[_ryser(rows, subsets[a], subsets[b]) for b in range(len(subsets))]
            for a in range(r0, r1)]


def fixed_subset_counts(images):
    """counts[k] = number of k-subsets mapped onto themselves by ``images``."""
    n = len(images)
    bit_img = [1 << images[i] for i in range(n)]
    img = [0] * (1 << n)
    counts = [0] * (n + 1)
    counts[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        m = img[mask ^ low] | bit_img[low.bit_length() - 1]
        img[mask] = m
        if m == mask:
            counts[bin(mask).count("1")] += 1
    return counts

"""Pure-Python scan of matrix indices for zeros of ``XAX - AXA``.

Tables are flat sequences of length ``q*q`` indexed as ``t[x*q + y]``.
Matrix indices are ``((x11*q + x12)*q + x21)*q + x22``.
"""


def scan_range(add, mul, q, a11, a12, a21, a22, start, stop):
    """Return the indices in ``[start, stop)`` whose matrix solves ``XAX == AXA``."""
    add = [add[i * q:(i + 1) * q] for i in range(q)]
    mul = [mul[i * q:(i + 1) * q] for i in range(q)]
    ma11, ma12, ma21, ma22 = mul[a11], mul[a12], mul[a21], mul[a22]
    out = []
    q2, q3 = q * q, q * q * q
    for x in range(start // q3, (stop - 1) // q3 + 1 if stop > start else 0):
        # per-row products with x = x11 fixed
        xa, xb = mul[x][a11], mul[x][a12]
        ax, cx = ma11[x], ma21[x]
        base_x = x * q3
        for y in range(q):
            base_xy = base_x + y * q2
            if base_xy + q2 <= start or base_xy >= stop:
                continue
            # first row of XA
            u1 = add[xa][mul[y][a21]]
            u2 = add[xb][mul[y][a22]]
            ay, cy = ma11[y], ma21[y]
            mu1, mu2 = mul[u1], mul[u2]
            r11_x = mu1[x]
            r12_y = mu1[y]
            for z in range(q):
                base = base_xy + z * q
                if base + q <= start or base >= stop:
                    continue
                v1 = add[ax][ma12[z]]
                v3 = add[cx][ma22[z]]
                s11 = mul[v1][a11]
                s21 = mul[v3][a11]
                r11 = add[r11_x][mu2[z]]
                za, zb = mul[z][a11], mul[z][a12]
                lo = start - base if base < start else 0
                hi = stop - base if base + q > stop else q
                for w in range(lo, hi):
                    v2 = add[ay][ma12[w]]
                    v4 = add[cy][ma22[w]]
                    if r11 != add[s11][mul[v2][a21]]:
                        continue
                    if add[r12_y][mu2[w]] != add[mul[v1][a12]][mul[v2][a22]]:
                        continue
                    u3 = add[za][mul[w][a21]]
                    u4 = add[zb][mul[w][a22]]
                    if add[mul[u3][x]][mul[u4][z]] != add[s21][mul[v4][a21]]:
                        continue
                    if add[mul[u3][y]][mul[u4][w]] != add[mul[v3][a12]][mul[v4][a22]]:
                        continue
                    out.append(base + w)
    return out

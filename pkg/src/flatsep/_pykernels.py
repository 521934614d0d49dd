"""Pure-Python versions of the compiled kernels in `_ckernels.pyx`."""


def run(delta, n_symbols, state, codes):
    q = state
    for c in codes:
        q = delta[q * n_symbols + c]
    return q


def word_action(delta, n_states, n_symbols, codes):
    # compose letter by letter: cheaper than n separate runs in Python
    act = list(range(n_states))
    for c in codes:
        act = [delta[q * n_symbols + c] for q in act]
    return tuple(act)


def cyk_dense(codes, unary, rules, start):
    n = len(codes)
    if n == 0:
        return False
    triples = [(rules[r], rules[r + 1], rules[r + 2]) for r in range(0, len(rules), 3)]
    chart = [[0] * n for _ in range(n)]
    for i, c in enumerate(codes):
        chart[i][i] = unary[c]
    for span in range(2, n + 1):
        for i in range(n - span + 1):
            j = i + span - 1
            acc = 0
            for k in range(i, j):
                left = chart[i][k]
                if not left:
                    continue
                right = chart[k + 1][j]
                if not right:
                    continue
                for a, b, c in triples:
                    if (left >> b) & 1 and (right >> c) & 1:
                        acc |= 1 << a
            chart[i][j] = acc
    return bool((chart[0][n - 1] >> start) & 1)

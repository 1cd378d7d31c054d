"""Pure-Python table kernels.

Every function takes the transition table flattened row-major: the successor
of state ``q`` on symbol index ``c`` is ``table[q * n_symbols + c]``.  Symbol
codes are assumed valid; callers encode and check words first.
"""


def walk(table, n_symbols, state, codes):
    for c in codes:
        state = table[state * n_symbols + c]
    return state


def trajectory(table, n_symbols, state, codes):
    out = [state]
    for c in codes:
        state = table[state * n_symbols + c]
        out.append(state)
    return out


def walk_many(table, n_symbols, state, codes, offsets):
    """Final state for each word ``codes[offsets[i]:offsets[i + 1]]``."""
    finals = []
    for i in range(len(offsets) - 1):
        q = state
        for j in range(offsets[i], offsets[i + 1]):
            q = table[q * n_symbols + codes[j]]
        finals.append(q)
    return finals


def live_states(table, n_states, n_symbols, accepting):
    """Flags for states from which some accepting state is reachable.

    ``accepting`` is a 0/1 sequence of length ``n_states``.
    """
    preds = [[] for _ in range(n_states)]
    for q in range(n_states):
        base = q * n_symbols
        for c in range(n_symbols):
            preds[table[base + c]].append(q)
    live = [bool(a) for a in accepting]
    stack = [q for q in range(n_states) if live[q]]
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if not live[p]:
                live[p] = True
                stack.append(p)
    return live

"""
Reinforcement schemes and the entropy gauge
===========================================

A learning automaton keeps a probability over its actions. Rewards pull
mass toward the chosen action, penalties push it away, and the normalized
entropy tracks how far learning has progressed (1 = uniform, 0 = locked).
"""
import numpy as np

from lacover import new_uniform, reward_inaction, reward_penalty

aut = new_uniform(("a", "b", "c", "d"), reward_inaction(0.3))
print("start:", aut.p, "entropy", aut.normalized_entropy())

# reward action 0 a few times
for step in range(5):
    aut.reward(0)
    print(f"after reward {step + 1}: p[0]={aut.p[0]:.6f}  "
          f"entropy={aut.normalized_entropy():.4f}")

# the reward recursion has a closed form from a uniform start:
# p0 after k rewards = 1 - (1-a)^k (1 - 1/r)
k, a, r = 5, 0.3, 4
print("closed form says:", 1 - (1 - a) ** k * (1 - 1 / r))

# under reward-inaction a penalty changes nothing
before = aut.p.copy()
aut.penalize(0)
print("penalty moved mass:", not np.array_equal(aut.p, before))

# under reward-penalty it redistributes toward the other actions
rp = new_uniform(("a", "b", "c", "d"), reward_penalty(0.2))
rp.penalize(0)
print("reward-penalty after one penalty:", rp.p)
print("sums stay at one:", float(rp.p.sum()))

# sampling uses the current distribution; a mask restricts the menu
rng = np.random.default_rng(7)
draws = [aut.select_action(rng) for _ in range(10)]
print("ten draws:", draws)
print("masked to {1,3}:", aut.select_action(rng, mask=[1, 3]))

"""
Searching small automata
========================

Run the four search predicates on small spaces.  Exhaustive runs visit one
representative per relabeling class; random runs are replayable from the
seed.
"""

from autolab.search import SearchTask, run_search

tasks = [
    SearchTask("simple-neq-weakly-contracting", 4, 2, "exhaustive"),
    SearchTask("extremal-not-irreducible", 4, 2, "exhaustive"),
    SearchTask("irreducible-no-rank2", 4, 2, "exhaustive"),
    SearchTask("reducible-no-eigenline", 4, 2, "exhaustive"),
    SearchTask("reducible-no-eigenline", 6, 2, "random", count=500, seed=1),
]

for task in tasks:
    result = run_search(task)
    s = result.summary()
    print(f"{task.pred:32} n={task.n} {task.mode:10} examined={s['examined']:5d} "
          f"in-domain={s['in_domain']:5d} findings={s['findings']}")
    for f in result.findings[:4]:
        print("    ", " / ".join(" ".join(str(t + 1) for t in row) for row in f.table))

from pathlib import Path

import argparse

from plumbcalc.graph import GraphDocument, random_graphs
from plumbcalc.io import write_graph

parser = argparse.ArgumentParser(
    prog="Make Corpus",
    description="A script to write a seeded corpus of random plumbing graphs for use with 'plumbcalc batch'",
)

parser.add_argument(
    "-o",
    "--outdir",
    help="Directory to write the .plumb files to. It is created if missing.",
    type=str,
    required=True,
)

parser.add_argument(
    "-n",
    "--count",
    help="Number of graphs to write. Default is 100.",
    type=int,
    default=100,
)

parser.add_argument(
    "-s",
    "--seed",
    help="Seed for the random number generator. Default is 0.",
    type=int,
    default=0,
)

parser.add_argument(
    "-m",
    "--max-vertices",
    help="Upper bound on the number of vertices in each graph. Default is 12.",
    type=int,
    default=12,
)

parser.add_argument(
    "--forest",
    help="Only write forests (no cycles, no parallel edges).",
    action="store_true",
)

parser.add_argument(
    "--areas",
    help="Give every vertex a positive area, as needed by 'plumbcalc check --gs'.",
    action="store_true",
)

args = parser.parse_args()

if args.count < 1:
    raise ValueError("The number of graphs must be at least 1")

outdir = Path(args.outdir)
width = len(str(args.count))

graphs = random_graphs(
    args.seed,
    args.count,
    max_vertices=args.max_vertices,
    forest=args.forest,
    with_areas=args.areas,
)

for i, graph in enumerate(graphs):
    document = GraphDocument(
        graph, f"random {i}", (f"seed {args.seed}, graph {i} of {args.count}",)
    )
    write_graph(document, outdir / f"graph_{i:0{width}d}.plumb")

print(f"Wrote {args.count} graphs to {outdir}")

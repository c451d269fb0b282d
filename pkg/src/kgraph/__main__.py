from kgraph.cli import entry

entry()

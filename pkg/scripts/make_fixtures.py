"""Write the named fixture graphs as heg files into data/."""

import argparse
from pathlib import Path

from regschreier.fixtures import NAMED
from regschreier.formats import parse_action, serialize_graph

ACTIONS = {
    "cycle4.perm": "a0: 1 2 3 0\n",
    "swap2.perm": "t0: 1 0 inv\n",
}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dir", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = p.parse_args()
    out = Path(args.dir)
    out.mkdir(exist_ok=True)
    for name, make in NAMED.items():
        (out / f"{name}.heg").write_text(serialize_graph(make()))
    for name, text in ACTIONS.items():
        parse_action(text)
        (out / name).write_text(text)
    print(f"wrote {len(NAMED) + len(ACTIONS)} files to {out}")


if __name__ == "__main__":
    main()

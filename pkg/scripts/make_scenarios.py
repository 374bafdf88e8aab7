"""Write every gallery scenario to scenarios/<slug>.json."""

import argparse
import pathlib
import re

from pilab.gallery import all_scenarios
from pilab.scenario import emit_scenario

SLUGS = {"Sweedler with dual action": "sweedler"}


def slug(name: str) -> str:
    if name in SLUGS:
        return SLUGS[name]
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


def main(out: str = "scenarios") -> None:
    root = pathlib.Path(out)
    root.mkdir(parents=True, exist_ok=True)
    for s in all_scenarios():
        path = root / f"{slug(s.name)}.json"
        path.write_text(emit_scenario(s), encoding="utf-8")
        print(path)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", nargs="?", default="scenarios", help="output directory")
    main(ap.parse_args().out)

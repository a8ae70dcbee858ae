#!/usr/bin/env python3
"""Write every built-in example to data/<name>.json in canonical form.

Re-run after touching the example library; the round-trip test reads these
files back and requires byte-identical re-serialization.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from motzeta import examples, io  # noqa: E402


def main():
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "data"
    out_dir.mkdir(exist_ok=True)
    for name, spec in examples.REGISTRY.items():
        path = out_dir / f"{name}.json"
        path.write_text(io.dumps(io.document_to_obj(spec.document)), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

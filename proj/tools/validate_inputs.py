#!/usr/bin/env python3
"""Validate CLI input files against the versioned schemas.

usage: validate_inputs.py SCHEMA_DIR VERB=FILE...
"""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource


def main(argv):
    schema_dir = pathlib.Path(argv[1])
    resources = []
    schemas = {}
    for path in sorted(schema_dir.glob("*.json")):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
        schemas[path.stem] = doc
    registry = Registry().with_resources(resources)
    failed = 0
    for arg in argv[2:]:
        verb, _, file = arg.partition("=")
        validator = jsonschema.Draft202012Validator(schemas[verb], registry=registry)
        errors = list(validator.iter_errors(json.loads(pathlib.Path(file).read_text())))
        for e in errors:
            print(f"{file}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        print(f"{'ok' if not errors else 'FAIL'} {verb} {file}")
        failed += bool(errors)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))

# Copyright 2026 The sosv Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validate `sosv parse --format interchange` output against the published schema."""

import copy
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    if len(sys.argv) < 4:
        print("usage: check_schema.py SOSV SCHEMA MODEL...", file=sys.stderr)
        return 2
    sosv, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failed = False
    for model in sys.argv[3:]:
        out = subprocess.run([sosv, "parse", model, "--format", "interchange"],
                             capture_output=True, text=True, check=False)
        if out.returncode != 0:
            print(f"FAIL {model}: sosv exited {out.returncode}\n{out.stderr}")
            failed = True
            continue
        doc = json.loads(out.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {model}: /{'/'.join(map(str, e.path))}: {e.message}")
        failed |= bool(errors)

        broken = copy.deepcopy(doc)
        broken["models"]["unknown-model"] = {}
        if validator.is_valid(broken):
            print(f"FAIL {model}: schema accepts an unknown model key")
            failed = True
        if not errors:
            print(f"ok {model}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

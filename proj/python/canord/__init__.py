# Copyright 2026 The canord Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for canord."""

import json

from ._canord import *  # noqa: F401,F403
from ._canord import run_config as _run_config


def run(config, threads=1, base_dir="."):
    """Runs a pipeline config (dict or JSON text) and returns the parsed report."""
    text = config if isinstance(config, str) else json.dumps(config)
    return json.loads(_run_config(text, base_dir, threads))

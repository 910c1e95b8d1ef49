# Copyright 2026 The spinqft Authors
# SPDX-License-Identifier: Apache-2.0

import pathlib

import pytest


def pytest_addoption(parser):
    parser.addoption("--cli", required=True, help="path to the spinqft binary")
    parser.addoption("--schemas", required=True, help="directory of *.schema.json")


@pytest.fixture(scope="session")
def cli(request):
    return request.config.getoption("--cli")


@pytest.fixture(scope="session")
def schema_dir(request):
    return pathlib.Path(request.config.getoption("--schemas"))

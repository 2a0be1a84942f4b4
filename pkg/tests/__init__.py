# SPDX-License-Identifier: MPL-2.0
"""
metta-kb test suite.

Unit tests per package plus integration suites for the golden corpus,
property checks and the space index oracle.
"""

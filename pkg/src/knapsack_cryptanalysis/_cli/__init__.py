# SPDX-License-Identifier: MIT
# SPDX-FileCopyrightText: 2025 knapsack-cryptanalysis contributors

from .app import app as app

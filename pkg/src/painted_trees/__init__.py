#
# This source file is part of the Painted Trees open-source project
#
# SPDX-FileCopyrightText: 2024 the project authors (see CONTRIBUTORS.md)
#
# SPDX-License-Identifier: MIT
#

__version__ = "0.1.0"

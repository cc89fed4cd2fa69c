# SPDX-FileCopyrightText: 2023-present David Davini <dndavini3.14@gmail.com>
#
# SPDX-License-Identifier: MIT

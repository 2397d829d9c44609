// Copyright 2026 The HBSA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hbsa/labels.hpp"

namespace hbsa {

std::string_view to_string(PhotonId photon) {
  switch (photon) {
    case PhotonId::A:
      return "A";
    case PhotonId::B:
      return "B";
    case PhotonId::X:
      return "X";
  }
  return "?";
}

std::string_view to_string(DofKind dof) {
  switch (dof) {
    case DofKind::P:
      return "P";
    case DofKind::F:
      return "F";
    case DofKind::S:
      return "S";
  }
  return "?";
}

std::string to_string(const QubitAddress& addr) {
  std::string out;
  out += to_string(addr.photon);
  out += '.';
  out += to_string(addr.dof);
  return out;
}

std::string_view to_string(const BellLabel& label) {
  static constexpr std::array<std::string_view, 4> names = {"phi+", "phi-",
                                                            "psi+", "psi-"};
  return names[static_cast<std::size_t>(label.index())];
}

std::string to_string(const HyperBellLabel& label) {
  std::string out;
  out += to_string(label.p);
  out += ',';
  out += to_string(label.f);
  out += ',';
  out += to_string(label.s);
  return out;
}

std::optional<BellLabel> parse_bell_label(std::string_view text) {
  for (int i = 0; i < 4; ++i) {
    const BellLabel label = BellLabel::from_index(i);
    if (text == to_string(label)) return label;
  }
  return std::nullopt;
}

std::optional<HyperBellLabel> parse_hyper_bell_label(std::string_view text) {
  std::array<BellLabel, 3> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t comma = text.find(',', start);
    const bool last = k == 2;
    if (last != (comma == std::string_view::npos)) return std::nullopt;
    const auto piece = text.substr(start, last ? text.size() - start : comma - start);
    const auto parsed = parse_bell_label(piece);
    if (!parsed) return std::nullopt;
    parts[k] = *parsed;
    start = comma + 1;
  }
  return HyperBellLabel{parts[0], parts[1], parts[2]};
}

}  // namespace hbsa

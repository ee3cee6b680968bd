#pragma once

// Printed generator tables used as golden data by the tests. Each entry is
// (sign, tensor word); the matrix is sign * (1/2) * word. The split f4 table
// is kept verbatim including its known A_4 misprint, which the tests flag.

#include <string>
#include <utility>
#include <vector>

namespace golden {

using Entry = std::pair<int, std::string>;

// 21 spin generators of so(4,3); A_4 is printed as IIx (duplicate of A_3),
// the generative rule gives Izx.
inline const std::vector<Entry>& f41_printed() {
  static const std::vector<Entry> t = {
      {1, "IIz"}, {1, "IIe"}, {1, "IIx"}, {1, "IIx"}, {1, "Ize"}, {1, "Izz"},
      {1, "Iex"}, {1, "Iee"}, {1, "Iez"}, {1, "IxI"}, {1, "zxx"}, {1, "zxe"},
      {1, "zxz"}, {1, "zeI"}, {1, "zzI"}, {1, "exx"}, {1, "exe"}, {1, "exz"},
      {1, "eeI"}, {1, "ezI"}, {1, "xII"}};
  return t;
}
inline const char* f41_corrected_a4() { return "Izx"; }

// 21 spin generators of so(0,7).
inline const std::vector<Entry>& f42_printed() {
  static const std::vector<Entry> t = {
      {-1, "Iez"}, {1, "Iex"},  {-1, "IIe"}, {-1, "eee"}, {1, "eIx"},  {1, "eIz"},
      {1, "exI"},  {1, "ezz"},  {-1, "ezx"}, {-1, "Ize"}, {1, "ezI"},  {-1, "exz"},
      {1, "exx"},  {1, "Ixe"},  {-1, "IeI"}, {-1, "xIe"}, {-1, "xex"}, {-1, "xez"},
      {1, "zeI"},  {1, "zxe"},  {1, "zze"}};
  return t;
}

// 28 Dirac-spinor generators of so(4,4).
inline const std::vector<Entry>& dir44_printed() {
  static const std::vector<Entry> t = {
      {1, "IIIz"}, {1, "IIIe"}, {1, "IIIx"}, {1, "IIzx"}, {1, "IIze"}, {1, "IIzz"},
      {1, "IIex"}, {1, "IIee"}, {1, "IIez"}, {1, "IIxI"}, {1, "Izxx"}, {1, "Izxe"},
      {1, "Izxz"}, {1, "IzeI"}, {1, "IzzI"}, {1, "Iexx"}, {1, "Iexe"}, {1, "Iexz"},
      {1, "IeeI"}, {1, "IezI"}, {1, "IxII"}, {1, "zxxx"}, {1, "zxxe"}, {1, "zxxz"},
      {1, "zxeI"}, {1, "zxzI"}, {1, "zeII"}, {1, "zzII"}};
  return t;
}

// Weyl blocks of the so(4,4) Dirac representation: (sign, word, minus-block
// relative sign).
struct WeylEntry {
  int sign;
  std::string word;
  int rel;  // rho_- = rel * rho_+ on this generator
};
inline const std::vector<WeylEntry>& rhopm_printed() {
  static const std::vector<WeylEntry> t = {
      {1, "IIz", 1},  {1, "IIe", 1},  {1, "IIx", 1},  {1, "Izx", 1},  {1, "Ize", 1},
      {1, "Izz", 1},  {1, "Iex", 1},  {1, "Iee", 1},  {1, "Iez", 1},  {1, "IxI", 1},
      {1, "zxx", 1},  {1, "zxe", 1},  {1, "zxz", 1},  {1, "zeI", 1},  {1, "zzI", 1},
      {1, "exx", 1},  {1, "exe", 1},  {1, "exz", 1},  {1, "eeI", 1},  {1, "ezI", 1},
      {1, "xII", 1},  {1, "xxx", -1}, {1, "xxe", -1}, {1, "xxz", -1}, {1, "xeI", -1},
      {1, "xzI", -1}, {1, "eII", -1}, {1, "zII", -1}};
  return t;
}

// 28 Dirac-spinor generators of so(8,0).
inline const std::vector<Entry>& dir80_printed() {
  static const std::vector<Entry> t = {
      {-1, "zezx"}, {1, "IIIe"},  {1, "zezz"},  {1, "zeIz"},  {-1, "IIze"}, {-1, "zeIx"},
      {1, "IIex"},  {-1, "zexI"}, {1, "IIez"},  {1, "zeee"},  {-1, "zxez"}, {-1, "Izxe"},
      {1, "zxex"},  {-1, "IzeI"}, {-1, "zxIe"}, {1, "Iexx"},  {1, "zIeI"},  {1, "Iexz"},
      {-1, "zIxe"}, {1, "IezI"},  {1, "zzze"},  {1, "Izez"},  {-1, "zxxe"}, {-1, "Izex"},
      {-1, "zxeI"}, {1, "IzIe"},  {-1, "zeII"}, {-1, "Ixze"}};
  return t;
}

// Weyl blocks of the so(8,0) Dirac representation.
inline const std::vector<WeylEntry>& weylso8_printed() {
  static const std::vector<WeylEntry> t = {
      {-1, "ezx", -1}, {1, "IIe", 1},   {1, "ezz", -1},  {1, "eIz", -1},  {-1, "Ize", 1},
      {-1, "eIx", -1}, {1, "Iex", 1},   {-1, "exI", -1}, {1, "Iez", 1},   {1, "eee", -1},
      {-1, "xez", -1}, {-1, "zxe", 1},  {1, "xex", -1},  {-1, "zeI", 1},  {-1, "xIe", -1},
      {1, "exx", 1},   {1, "IeI", -1},  {1, "exz", 1},   {-1, "Ixe", -1}, {1, "ezI", 1},
      {1, "zze", -1},  {1, "zez", 1},   {-1, "xxe", -1}, {-1, "zex", 1},  {-1, "xeI", -1},
      {1, "zIe", 1},   {-1, "eII", -1}, {-1, "xze", 1}};
  return t;
}

}  // namespace golden

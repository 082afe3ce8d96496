#pragma once

#include <string_view>
#include <utility>
#include <vector>

/* Right and left clone columns of the stability table, and the published lists of
   stable classes for pairs of clones. Names refer to the class and clone rosters. */

namespace minion::data
{

struct table_row_text
{
  std::string_view cls;
  std::string_view right;
  std::string_view left;
};

/* all = true stands for the full roster */
struct stable_list
{
  std::string_view c1;
  std::string_view c2;
  bool all;
  std::vector<std::string_view> classes;
};

inline const std::vector<table_row_text>& table2_text()
{
  static const std::vector<table_row_text> rows = {
      { "Omega", "Omega", "Omega" }, { "Omega_leq", "Tc", "M" }, { "Omega_geq", "Tc", "M" },
      { "Omega_neq00", "Tc", "U" }, { "Omega_neq11", "Tc", "W" }, { "Omega_eq", "Tc", "Omega" },
      { "Omega_neq", "Tc", "S" }, { "Omega_0x_c", "T0", "M" }, { "Omega_1x_c", "T0", "M" },
      { "Omega_x0_c", "T1", "M" }, { "Omega_x1_c", "T1", "M" }, { "Omega_0x", "T0", "T0" },
      { "Omega_1x", "T0", "T1" }, { "Omega_x0", "T1", "T0" }, { "Omega_x1", "T1", "T1" },
      { "Omega_00_c", "Tc", "M" }, { "Omega_11_c", "Tc", "M" }, { "Omega_00", "Tc", "T0" },
      { "Omega_11", "Tc", "T1" }, { "Omega_01_c", "Tc", "M" }, { "Omega_10_c", "Tc", "M" },
      { "Omega_01_c0", "Tc", "M0" }, { "Omega_10_c1", "Tc", "M1" }, { "Omega_01_c1", "Tc", "M1" },
      { "Omega_10_c0", "Tc", "M0" }, { "Omega_01", "Tc", "Tc" }, { "Omega_10", "Tc", "Tc" },
      { "Smin", "S", "U" }, { "Smaj", "S", "W" }, { "Smin_neq", "Sc", "SM" },
      { "Smaj_neq", "Sc", "SM" }, { "Smin_0x", "Sc", "U" }, { "Smaj_1x", "Sc", "W" },
      { "Smin_x0", "Sc", "U" }, { "Smaj_x1", "Sc", "W" }, { "Smin_01_c0", "Sc", "MU" },
      { "Smaj_10_c1", "Sc", "MW" }, { "Smin_10_c0", "Sc", "MU" }, { "Smaj_01_c1", "Sc", "MW" },
      { "Smin_01", "Sc", "TcU" }, { "Smaj_10", "Sc", "TcW" }, { "Smin_10", "Sc", "TcU" },
      { "Smaj_01", "Sc", "TcW" }, { "Smin_00", "Sc", "U" }, { "Smaj_11", "Sc", "W" },
      { "S", "S", "S" }, { "Sc", "Sc", "Sc" }, { "Scneg", "Sc", "Sc" },
      { "M", "M", "M" }, { "Mneg", "M", "M" }, { "M0", "M0", "M0" },
      { "M0neg", "M0", "M1" }, { "M1", "M1", "M1" }, { "M1neg", "M1", "M0" },
      { "Mc", "Mc", "Mc" }, { "Mcneg", "Mc", "Mc" }, { "SM", "SM", "SM" },
      { "SMneg", "SM", "SM" }, { "U", "U", "U" }, { "Uneg", "U", "W" },
      { "TcU_c0", "TcU", "MU" }, { "TcUneg_c1", "TcU", "MW" }, { "TcU", "TcU", "TcU" },
      { "TcUneg", "TcU", "TcW" }, { "MU", "MU", "MU" }, { "MUneg", "MU", "MW" },
      { "McU", "McU", "McU" }, { "McUneg", "McU", "McW" }, { "W", "W", "W" },
      { "Wneg", "W", "U" }, { "TcW_c1", "TcW", "MW" }, { "TcWneg_c0", "TcW", "MU" },
      { "TcW", "TcW", "TcW" }, { "TcWneg", "TcW", "TcU" }, { "MW", "MW", "MW" },
      { "MWneg", "MW", "MU" }, { "McW", "McW", "McW" }, { "McWneg", "McW", "McU" },
      { "U_00", "TcU", "U" }, { "Uneg_11", "TcU", "W" }, { "W_11", "TcW", "W" },
      { "Wneg_00", "TcW", "U" }, { "U_Wneg", "SM", "U" }, { "W_Uneg", "SM", "W" },
      { "Refl", "S", "Omega" }, { "Refl_00_c", "Sc", "M" }, { "Refl_11_c", "Sc", "M" },
      { "Refl_00", "Sc", "T0" }, { "Refl_11", "Sc", "T1" }, { "Vak", "Omega", "Omega" },
      { "Vak0", "Omega", "T0" }, { "Vak1", "Omega", "T1" }, { "Empty", "Omega", "Omega" }
  };
  return rows;
}

inline const std::vector<stable_list>& stable_lists()
{
  static const std::vector<stable_list> lists = {
      { "Ic", "McU", false, {
          "Omega", "Omega_leq", "Omega_geq", "Omega_neq00", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c",
          "Omega_x1_c", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_00",
          "Omega_11", "Omega_01_c", "Omega_10_c", "Omega_01_c0", "Omega_10_c1", "Omega_01_c1", "Omega_10_c0",
          "Omega_01", "Omega_10", "Smin", "Smin_0x", "Smin_x0", "Smin_01_c0", "Smin_10_c0", "Smin_01", "Smin_10",
          "Smin_00", "M", "Mneg", "M0", "M0neg", "M1", "M1neg", "Mc", "Mcneg", "U", "TcU_c0", "TcU", "MU", "McU",
          "Wneg", "TcWneg_c0", "TcWneg", "MWneg", "McWneg", "U_00", "Wneg_00", "U_Wneg", "Refl", "Refl_00_c",
          "Refl_11_c", "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "Ic", "MU", false, {
          "Omega", "Omega_leq", "Omega_geq", "Omega_neq00", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c",
          "Omega_x1_c", "Omega_0x", "Omega_x0", "Omega_00_c", "Omega_11_c", "Omega_00", "Omega_01_c", "Omega_10_c",
          "Omega_01_c0", "Omega_10_c0", "Smin", "Smin_0x", "Smin_x0", "Smin_01_c0", "Smin_10_c0", "Smin_00", "M",
          "Mneg", "M0", "M1neg", "U", "TcU_c0", "MU", "Wneg", "TcWneg_c0", "MWneg", "U_00", "Wneg_00", "U_Wneg", "Refl",
          "Refl_00_c", "Refl_11_c", "Refl_00", "Vak", "Vak0", "Empty" } },
      { "Ic", "TcU", false, {
          "Omega", "Omega_neq00", "Omega_eq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11",
          "Omega_01", "Omega_10", "Smin", "Smin_0x", "Smin_x0", "Smin_01", "Smin_10", "Smin_00", "U", "TcU", "Wneg",
          "TcWneg", "U_00", "Wneg_00", "U_Wneg", "Refl", "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "Ic", "U", false, {
          "Omega", "Omega_neq00", "Omega_eq", "Omega_0x", "Omega_x0", "Omega_00", "Smin", "Smin_0x", "Smin_x0",
          "Smin_00", "U", "Wneg", "U_00", "Wneg_00", "U_Wneg", "Refl", "Refl_00", "Vak", "Vak0", "Empty" } },
      { "Ic", "McW", false, {
          "Omega", "Omega_leq", "Omega_geq", "Omega_neq11", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c",
          "Omega_x1_c", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_00",
          "Omega_11", "Omega_01_c", "Omega_10_c", "Omega_01_c0", "Omega_10_c1", "Omega_01_c1", "Omega_10_c0",
          "Omega_01", "Omega_10", "Smaj", "Smaj_1x", "Smaj_x1", "Smaj_10_c1", "Smaj_01_c1", "Smaj_10", "Smaj_01",
          "Smaj_11", "M", "Mneg", "M0", "M0neg", "M1", "M1neg", "Mc", "Mcneg", "Uneg", "TcUneg_c1", "TcUneg", "MUneg",
          "McUneg", "W", "TcW_c1", "TcW", "MW", "McW", "Uneg_11", "W_11", "W_Uneg", "Refl", "Refl_00_c", "Refl_11_c",
          "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "Ic", "MW", false, {
          "Omega", "Omega_leq", "Omega_geq", "Omega_neq11", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c",
          "Omega_x1_c", "Omega_1x", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_11", "Omega_01_c", "Omega_10_c",
          "Omega_10_c1", "Omega_01_c1", "Smaj", "Smaj_1x", "Smaj_x1", "Smaj_10_c1", "Smaj_01_c1", "Smaj_11", "M",
          "Mneg", "M0neg", "M1", "Uneg", "TcUneg_c1", "MUneg", "W", "TcW_c1", "MW", "Uneg_11", "W_11", "W_Uneg", "Refl",
          "Refl_00_c", "Refl_11_c", "Refl_11", "Vak", "Vak1", "Empty" } },
      { "Ic", "TcW", false, {
          "Omega", "Omega_neq11", "Omega_eq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11",
          "Omega_01", "Omega_10", "Smaj", "Smaj_1x", "Smaj_x1", "Smaj_10", "Smaj_01", "Smaj_11", "Uneg", "TcUneg", "W",
          "TcW", "Uneg_11", "W_11", "W_Uneg", "Refl", "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "Ic", "W", false, {
          "Omega", "Omega_neq11", "Omega_eq", "Omega_1x", "Omega_x1", "Omega_11", "Smaj", "Smaj_1x", "Smaj_x1",
          "Smaj_11", "Uneg", "W", "Uneg_11", "W_11", "W_Uneg", "Refl", "Refl_11", "Vak", "Vak1", "Empty" } },
      { "Ic", "Sc", false, {
          "Omega", "Omega_eq", "Omega_neq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11",
          "Omega_01", "Omega_10", "S", "Sc", "Scneg", "Refl", "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "Ic", "S", false, { "Omega", "Omega_eq", "Omega_neq", "S", "Refl", "Vak", "Empty" } },
      { "Ic", "Mc", false, {
          "Omega", "Omega_geq", "Omega_leq", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c", "Omega_x1_c",
          "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_00", "Omega_11",
          "Omega_01_c", "Omega_10_c", "Omega_01_c0", "Omega_10_c1", "Omega_01_c1", "Omega_10_c0", "Omega_01",
          "Omega_10", "M", "Mneg", "M0", "M0neg", "M1", "M1neg", "Mc", "Mcneg", "Refl", "Refl_00_c", "Refl_11_c",
          "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "Ic", "M0", false, {
          "Omega", "Omega_geq", "Omega_leq", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c", "Omega_x1_c",
          "Omega_0x", "Omega_x0", "Omega_00_c", "Omega_11_c", "Omega_00", "Omega_01_c", "Omega_10_c", "Omega_01_c0",
          "Omega_10_c0", "M", "Mneg", "M0", "M1neg", "Refl", "Refl_00_c", "Refl_11_c", "Refl_00", "Vak", "Vak0", "Empty"
          } },
      { "Ic", "M1", false, {
          "Omega", "Omega_geq", "Omega_leq", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c", "Omega_x1_c",
          "Omega_1x", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_11", "Omega_01_c", "Omega_10_c", "Omega_10_c1",
          "Omega_01_c1", "M", "Mneg", "M0neg", "M1", "Refl", "Refl_00_c", "Refl_11_c", "Refl_11", "Vak", "Vak1", "Empty"
          } },
      { "Ic", "M", false, {
          "Omega", "Omega_geq", "Omega_leq", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c", "Omega_x1_c",
          "Omega_00_c", "Omega_11_c", "Omega_01_c", "Omega_10_c", "M", "Mneg", "Refl", "Refl_00_c", "Refl_11_c", "Vak",
          "Empty" } },
      { "Ic", "Tc", false, {
          "Omega", "Omega_eq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11", "Omega_01",
          "Omega_10", "Refl", "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "Ic", "T0", false, {
          "Omega", "Omega_eq", "Omega_0x", "Omega_x0", "Omega_00", "Refl", "Refl_00", "Vak", "Vak0", "Empty" } },
      { "Ic", "T1", false, {
          "Omega", "Omega_eq", "Omega_1x", "Omega_x1", "Omega_11", "Refl", "Refl_11", "Vak", "Vak1", "Empty" } },
      { "Ic", "Omega", false, { "Omega", "Omega_eq", "Refl", "Vak", "Empty" } },
      { "SM", "SM", true, {} },
      { "McU", "McU", false, {
          "Omega", "Omega_leq", "Omega_geq", "Omega_neq00", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c",
          "Omega_x1_c", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_00",
          "Omega_11", "Omega_01_c", "Omega_10_c", "Omega_01_c0", "Omega_10_c1", "Omega_01_c1", "Omega_10_c0",
          "Omega_01", "Omega_10", "M", "Mneg", "M0", "M0neg", "M1", "M1neg", "Mc", "Mcneg", "U", "TcU_c0", "TcU", "MU",
          "McU", "U_00", "Vak", "Vak0", "Vak1", "Empty" } },
      { "MU", "MU", false, {
          "Omega", "Omega_0x_c", "Omega_1x_c", "Omega_0x", "M", "Mneg", "M0", "U", "MU", "Vak", "Vak0", "Empty" } },
      { "TcU", "TcU", false, {
          "Omega", "Omega_neq00", "Omega_eq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11",
          "Omega_01", "Omega_10", "U", "TcU", "U_00", "Vak", "Vak0", "Vak1", "Empty" } },
      { "U", "U", false, { "Omega", "Omega_0x", "U", "Vak", "Vak0", "Empty" } },
      { "McW", "McW", false, {
          "Omega", "Omega_leq", "Omega_geq", "Omega_neq11", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c",
          "Omega_x1_c", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_00",
          "Omega_11", "Omega_01_c", "Omega_10_c", "Omega_01_c0", "Omega_10_c1", "Omega_01_c1", "Omega_10_c0",
          "Omega_01", "Omega_10", "M", "Mneg", "M0", "M0neg", "M1", "M1neg", "Mc", "Mcneg", "W", "TcW_c1", "TcW", "MW",
          "McW", "W_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "MW", "MW", false, {
          "Omega", "Omega_x0_c", "Omega_x1_c", "Omega_x1", "M", "Mneg", "M1", "W", "MW", "Vak", "Vak1", "Empty" } },
      { "TcW", "TcW", false, {
          "Omega", "Omega_neq11", "Omega_eq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11",
          "Omega_01", "Omega_10", "W", "TcW", "W_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "W", "W", false, { "Omega", "Omega_x1", "W", "Vak", "Vak1", "Empty" } },
      { "Sc", "Sc", false, {
          "Omega", "Omega_eq", "Omega_neq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11",
          "Omega_01", "Omega_10", "S", "Sc", "Scneg", "Refl", "Refl_00", "Refl_11", "Vak", "Vak0", "Vak1", "Empty" } },
      { "S", "S", false, { "Omega", "S", "Refl", "Vak", "Empty" } },
      { "Mc", "Mc", false, {
          "Omega", "Omega_geq", "Omega_leq", "Omega_eq", "Omega_0x_c", "Omega_1x_c", "Omega_x0_c", "Omega_x1_c",
          "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00_c", "Omega_11_c", "Omega_00", "Omega_11",
          "Omega_01_c", "Omega_10_c", "Omega_01_c0", "Omega_10_c1", "Omega_01_c1", "Omega_10_c0", "Omega_01",
          "Omega_10", "M", "Mneg", "M0", "M0neg", "M1", "M1neg", "Mc", "Mcneg", "Vak", "Vak0", "Vak1", "Empty" } },
      { "M0", "M0", false, {
          "Omega", "Omega_0x_c", "Omega_1x_c", "Omega_0x", "M", "Mneg", "M0", "Vak", "Vak0", "Empty" } },
      { "M1", "M1", false, {
          "Omega", "Omega_x0_c", "Omega_x1_c", "Omega_x1", "M", "Mneg", "M1", "Vak", "Vak1", "Empty" } },
      { "M", "M", false, { "Omega", "M", "Mneg", "Vak", "Empty" } },
      { "Tc", "Tc", false, {
          "Omega", "Omega_eq", "Omega_0x", "Omega_1x", "Omega_x0", "Omega_x1", "Omega_00", "Omega_11", "Omega_01",
          "Omega_10", "Vak", "Vak0", "Vak1", "Empty" } },
      { "T0", "T0", false, { "Omega", "Omega_0x", "Vak", "Vak0", "Empty" } },
      { "T1", "T1", false, { "Omega", "Omega_x1", "Vak", "Vak1", "Empty" } },
      { "Omega", "Omega", false, { "Omega", "Vak", "Empty" } }
  };
  return lists;
}

/* classes sharing a line of the stability table, and those alone on theirs */
inline const std::vector<std::pair<std::string_view, std::string_view>>& table_pairs()
{
  static const std::vector<std::pair<std::string_view, std::string_view>> p = {
      { "Omega_leq", "Omega_geq" }, { "Omega_neq00", "Omega_neq11" }, { "Omega_0x_c", "Omega_1x_c" },
      { "Omega_x0_c", "Omega_x1_c" }, { "Omega_0x", "Omega_1x" }, { "Omega_x0", "Omega_x1" },
      { "Omega_00_c", "Omega_11_c" }, { "Omega_00", "Omega_11" }, { "Omega_01_c", "Omega_10_c" },
      { "Omega_01_c0", "Omega_10_c1" }, { "Omega_01_c1", "Omega_10_c0" }, { "Omega_01", "Omega_10" },
      { "Smin", "Smaj" }, { "Smin_neq", "Smaj_neq" }, { "Smin_0x", "Smaj_1x" },
      { "Smin_x0", "Smaj_x1" }, { "Smin_01_c0", "Smaj_10_c1" }, { "Smin_10_c0", "Smaj_01_c1" },
      { "Smin_01", "Smaj_10" }, { "Smin_10", "Smaj_01" }, { "Smin_00", "Smaj_11" },
      { "Sc", "Scneg" }, { "M", "Mneg" }, { "M0", "M0neg" },
      { "M1", "M1neg" }, { "Mc", "Mcneg" }, { "SM", "SMneg" },
      { "U", "Uneg" }, { "TcU_c0", "TcUneg_c1" }, { "TcU", "TcUneg" },
      { "MU", "MUneg" }, { "McU", "McUneg" }, { "W", "Wneg" },
      { "TcW_c1", "TcWneg_c0" }, { "TcW", "TcWneg" }, { "MW", "MWneg" },
      { "McW", "McWneg" }, { "U_00", "Uneg_11" }, { "W_11", "Wneg_00" },
      { "U_Wneg", "W_Uneg" }, { "Refl_00_c", "Refl_11_c" }, { "Refl_00", "Refl_11" },
      { "Vak0", "Vak1" }
  };
  return p;
}

inline const std::vector<std::string_view>& table_singles()
{
  static const std::vector<std::string_view> s = { "Omega", "Omega_eq", "Omega_neq", "S", "Refl", "Vak", "Empty" };
  return s;
}

} // namespace minion::data

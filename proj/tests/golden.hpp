/// @file golden.hpp
/// @brief Hand-entered reference tables for the small triangles, kept as
///        decimal strings so entries beyond 64 bits survive verbatim.
///
/// Each table carries the printed row-sum column; check() compares both the
/// printable rows and the full-row sums of the generated triangle.

#pragma once

#include <string>
#include <vector>

#include <stirling/io.hpp>
#include <stirling/triangle.hpp>

namespace golden {

enum class Family { Cycle, Subset, QuasiCycle, QuasiSubset };

struct Table {
    const char* label;
    Family family;
    int r;
    std::vector<std::vector<const char*>> rows;
    std::vector<const char*> sums;
};

inline stirling::Triangle build(const Table& g) {
    const int n_max = static_cast<int>(g.rows.size()) - 1;
    switch (g.family) {
        case Family::Cycle: return stirling::stirling_cycle_r(g.r, n_max);
        case Family::Subset: return stirling::stirling_subset_r(g.r, n_max);
        case Family::QuasiCycle:
            return stirling::quasi_eulerian(stirling::TriangleKind::StirlingCycle, g.r, n_max);
        case Family::QuasiSubset:
            return stirling::quasi_eulerian(stirling::TriangleKind::StirlingSubset, g.r, n_max);
    }
    throw std::logic_error("golden::build: bad family");
}

/// Empty string when every printed entry and every row sum matches.
inline std::string check(const Table& g) {
    const stirling::Triangle t = build(g);
    const auto rows = stirling::printable_rows(t);
    const auto where = [&g](size_t n, size_t k) {
        return std::string(g.label) + " row " + std::to_string(n) + " entry " + std::to_string(k);
    };
    if (rows.size() != g.rows.size())
        return std::string(g.label) + ": row count " + std::to_string(rows.size());
    for (size_t n = 0; n < g.rows.size(); ++n) {
        if (rows[n].size() != g.rows[n].size())
            return std::string(g.label) + " row " + std::to_string(n) + ": width " +
                   std::to_string(rows[n].size()) + " != " + std::to_string(g.rows[n].size());
        for (size_t k = 0; k < g.rows[n].size(); ++k)
            if (rows[n][k] != stirling::Int(g.rows[n][k]))
                return where(n, k) + " = " + rows[n][k].str() + ", expected " + g.rows[n][k];
    }
    const auto sums = t.row_sums();
    for (size_t n = 0; n < g.sums.size(); ++n)
        if (sums[n] != stirling::Int(g.sums[n]))
            return std::string(g.label) + " row " + std::to_string(n) + " sum " + sums[n].str() +
                   ", expected " + g.sums[n];
    return "";
}

inline const std::vector<Table>& tables() {
    static const std::vector<Table> v = {
        {"cycle r=1",
         Family::Cycle,
         1,
         {{"1"},
          {"0", "1"},
          {"0", "1", "1"},
          {"0", "2", "3", "1"},
          {"0", "6", "11", "6", "1"},
          {"0", "24", "50", "35", "10", "1"},
          {"0", "120", "274", "225", "85", "15", "1"},
          {"0", "720", "1764", "1624", "735", "175", "21", "1"},
          {"0", "5040", "13068", "13132", "6769", "1960", "322", "28", "1"}},
         {"1", "1", "2", "6", "24", "120", "720", "5040", "40320"}},
        {"cycle r=2",
         Family::Cycle,
         2,
         {{"1"},
          {"0", "1"},
          {"0", "2", "3"},
          {"0", "6", "20", "15"},
          {"0", "24", "130", "210", "105"},
          {"0", "120", "924", "2380", "2520", "945"},
          {"0", "720", "7308", "26432", "44100", "34650", "10395"},
          {"0", "5040", "64224", "303660", "705320", "866250", "540540", "135135"},
          {"0", "40320", "623376", "3678840", "11098780", "18858840", "18288270", "9459450",
           "2027025"}},
         {"1", "1", "5", "41", "469", "6889", "123605", "2620169", "64074901"}},
        {"cycle r=3",
         Family::Cycle,
         3,
         {{"1"},
          {"0", "2"},
          {"0", "6", "40"},
          {"0", "24", "420", "2240"},
          {"0", "120", "3948", "50400", "246400"},
          {"0", "720", "38304", "859320", "9609600", "44844800"},
          {"0", "5040", "396576", "13665960", "258978720", "2690688000", "12197785600"},
          {"0", "40320", "4419360", "216339552", "6112906800", "105205900800", "1042910668800",
           "4635158528000"}},
         {"1", "2", "46", "2684", "300868", "55352744", "15161519896", "5789608803632"}},
        {"cycle r=4",
         Family::Cycle,
         4,
         {{"1"},
          {"0", "6"},
          {"0", "24", "1260"},
          {"0", "120", "18144", "1247400"},
          {"0", "720", "223776", "38918880", "3405402000"},
          {"0", "5040", "2756160", "889945056", "185253868800", "19799007228000"},
          {"0", "40320", "35307360", "18478684224", "6780291598080", "1663116607152000",
           "210384250804728000"}},
         {"1", "6", "1284", "1265664", "3444545376", "19985153803056", "212054166217509984"}},
        {"subset r=1",
         Family::Subset,
         1,
         {{"1"},
          {"0", "1"},
          {"0", "1", "1"},
          {"0", "1", "3", "1"},
          {"0", "1", "7", "6", "1"},
          {"0", "1", "15", "25", "10", "1"},
          {"0", "1", "31", "90", "65", "15", "1"},
          {"0", "1", "63", "301", "350", "140", "21", "1"},
          {"0", "1", "127", "966", "1701", "1050", "266", "28", "1"}},
         {"1", "1", "2", "5", "15", "52", "203", "877", "4140"}},
        {"subset r=2",
         Family::Subset,
         2,
         {{"1"},
          {"0", "1"},
          {"0", "1", "3"},
          {"0", "1", "10", "15"},
          {"0", "1", "25", "105", "105"},
          {"0", "1", "56", "490", "1260", "945"},
          {"0", "1", "119", "1918", "9450", "17325", "10395"},
          {"0", "1", "246", "6825", "56980", "190575", "270270", "135135"},
          {"0", "1", "501", "22935", "302995", "1636635", "4099095", "4729725", "2027025"}},
         {"1", "1", "4", "26", "236", "2752", "39208", "660032", "12818912"}},
        {"subset r=3",
         Family::Subset,
         3,
         {{"1"},
          {"0", "1"},
          {"0", "1", "10"},
          {"0", "1", "35", "280"},
          {"0", "1", "91", "2100", "15400"},
          {"0", "1", "210", "10395", "200200", "1401400"},
          {"0", "1", "456", "42735", "1611610", "28028000", "190590400"},
          {"0", "1", "957", "158301", "10335325", "333533200", "5431826400", "36212176000"},
          {"0", "1", "1969", "549549", "57962905", "3073270200", "89625135600", "1394168776000",
           "9161680528000"}},
         {"1", "1", "11", "316", "17592", "1612206", "220273202", "41988030184",
          "10648606224224"}},
        {"subset r=4",
         Family::Subset,
         4,
         {{"1"},
          {"0", "1"},
          {"0", "1", "35"},
          {"0", "1", "126", "5775"},
          {"0", "1", "336", "45045", "2627625"},
          {"0", "1", "792", "231231", "35735700", "2546168625"},
          {"0", "1", "1749", "981981", "300179880", "53469541125", "4509264634875"},
          {"0", "1", "3718", "3741738", "2002016016", "666586946025", "135277939046250",
           "13189599057009375"}},
         {"1", "1", "36", "5902", "2673007", "2582136349", "4563035339611",
          "13325545588763123"}},
        {"quasi-cycle r=1",
         Family::QuasiCycle,
         1,
         {{"1"},
          {"1", "0"},
          {"0", "1", "0"},
          {"0", "-1", "2", "0"},
          {"0", "2", "-7", "6", "0"},
          {"0", "-6", "29", "-46", "24", "0"},
          {"0", "24", "-146", "329", "-326", "120", "0"},
          {"0", "-120", "874", "-2521", "3604", "-2556", "720", "0"},
          {"0", "720", "-6084", "21244", "-39271", "40564", "-22212", "5040", "0"}},
         {"1", "1", "1", "1", "1", "1", "1", "1", "1"}},
        {"quasi-cycle r=2",
         Family::QuasiCycle,
         2,
         {{"1"},
          {"1"},
          {"1", "2"},
          {"1", "8", "6"},
          {"1", "22", "58", "24"},
          {"1", "52", "328", "444", "120"},
          {"1", "114", "1452", "4400", "3708", "720"},
          {"1", "240", "5610", "32120", "58140", "33984", "5040"},
          {"1", "494", "19950", "195800", "644020", "785304", "341136", "40320"}},
         {"1", "1", "3", "15", "105", "945", "10395", "135135", "2027025"}},
        {"quasi-cycle r=3",
         Family::QuasiCycle,
         3,
         {{"1"},
          {"2"},
          {"34", "6"},
          {"1844", "372", "24"},
          {"199828", "42864", "3588", "120"},
          {"36056936", "8002992", "748728", "35424", "720"},
          {"9752801896", "2212167336", "220309896", "12130056", "371376", "5040"},
          {"3691552813712", "849994084272", "88121628912", "5290935792", "194847552", "4177440",
           "40320"}},
         {"1", "2", "40", "2240", "246400", "44844800", "12197785600", "4635158528000"}},
        {"quasi-cycle r=4",
         Family::QuasiCycle,
         4,
         {{"1"},
          {"6"},
          {"1236", "24"},
          {"1229376", "17904", "120"},
          {"3366706176", "38473488", "221616", "720"},
          {"19614640553136", "183482227008", "881706816", "2736000", "5040"},
          {"208727896045756896", "1649611318980672", "6725066986368", "18337857984", "35105760",
           "40320"}},
         {"1", "6", "1260", "1247400", "3405402000", "19799007228000", "210384250804728000"}},
        {"quasi-cycle r=5",
         Family::QuasiCycle,
         5,
         {{"1"},
          {"24"},
          {"72456", "120"},
          {"1742235984", "1329120", "720"},
          {"162123744912336", "69701970960", "20323440", "5040"},
          {"41351875243477668864", "11349535075620480", "2003358856320", "303776640", "40320"}},
         {"1", "24", "72576", "1743565824", "162193467211776", "41363226782215962624"}},
        {"quasi-subset r=1",
         Family::QuasiSubset,
         1,
         {{"1"},
          {"1", "0"},
          {"0", "1", "0"},
          {"-1", "1", "1", "0"},
          {"1", "-5", "4", "1", "0"},
          {"2", "1", "-14", "11", "1", "0"},
          {"-9", "36", "-29", "-24", "26", "1", "0"},
          {"9", "-104", "281", "-244", "1", "57", "1", "0"},
          {"50", "-83", "-454", "1401", "-1259", "225", "120", "1", "0"}},
         {"1", "1", "1", "1", "1", "1", "1", "1", "1"}},
        {"quasi-subset r=2",
         Family::QuasiSubset,
         2,
         {{"1"},
          {"1"},
          {"2", "1"},
          {"6", "8", "1"},
          {"24", "58", "22", "1"},
          {"120", "444", "328", "52", "1"},
          {"720", "3708", "4400", "1452", "114", "1"},
          {"5040", "33984", "58140", "32120", "5610", "240", "1"},
          {"40320", "341136", "785304", "644020", "195800", "19950", "494", "1"}},
         {"1", "1", "3", "15", "105", "945", "10395", "135135", "2027025"}},
        {"quasi-subset r=3",
         Family::QuasiSubset,
         3,
         {{"1"},
          {"1"},
          {"9", "1"},
          {"246", "33", "1"},
          {"13390", "1921", "88", "1"},
          {"1211386", "180036", "9771", "206", "1"},
          {"164131730", "24931166", "1486131", "40921", "451", "1"},
          {"31103704820", "4795137550", "303467476", "9711671", "153531", "951", "1"},
          {"7854121032724", "1223909199718", "80747636454", "2846874725", "55244660", "537756",
           "1962", "1"}},
         {"1", "1", "10", "280", "15400", "1401400", "190590400", "36212176000",
          "9161680528000"}},
        {"quasi-subset r=4",
         Family::QuasiSubset,
         4,
         {{"1"},
          {"1"},
          {"34", "1"},
          {"5650", "124", "1"},
          {"2582915", "44376", "333", "1"},
          {"2510663365", "35275610", "228861", "788", "1"},
          {"4456094293397", "52872120317", "297244421", "974995", "1744", "1"},
          {"13054985706631155", "133950756253880", "660603311240", "1987086224", "3723163",
           "3712", "1"}},
         {"1", "1", "35", "5775", "2627625", "2546168625", "4509264634875",
          "13189599057009375"}},
        {"quasi-subset r=5",
         Family::QuasiSubset,
         5,
         {{"1"},
          {"1"},
          {"125", "1"},
          {"125665", "460", "1"},
          {"487856621", "1006503", "1251", "1"},
          {"5187834064414", "6833491661", "5300301", "2999", "1"},
          {"123266182967274060", "112433009305765", "59083404656", "23048178", "6716", "1"}},
         {"1", "1", "126", "126126", "488864376", "5194672859376", "123378675083039376"}},
    };
    return v;
}

} // namespace golden

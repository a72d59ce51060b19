#pragma once

#include <array>
#include <string>

// Printed reference grids for the D = 13 and D = 17 index tables, row label
// n, column label m, columns/rows ordered 1,2,3,4,w,...,3w+3. Values are the
// printed cells verbatim; "-" marks printed dashes.
//
// Two printed D = 13 cells, (m,n) = (3w,2w+1) and (2w+1,3w), show 48 even
// though (3w) and (2w+1) share the ideal (w-1); the grid caption restricts
// the table to coprime (m,n), so our emitter prints dashes there. These two
// cells are asserted as the only deviations.

namespace teich_test {

inline constexpr int kGridSize = 16;

inline const std::array<std::array<const char*, 16>, 16> kTable13 = {{
    // n = 1
    {{"1", "5", "16", "20", "4", "1", "4", "12", "20", "12", "5", "4", "48", "24", "18", "16"}},
    // n = 2
    {{"5", "-", "80", "-", "20", "5", "20", "60", "-", "60", "-", "20", "240", "120", "90", "80"}},
    // n = 3
    {{"16", "80", "-", "320", "-", "16", "-", "-", "-", "-", "80", "-", "-", "384", "288", "-"}},
    // n = 4
    {{"20", "-", "320", "-", "80", "20", "80", "240", "-", "240", "-", "80", "960", "480", "360", "320"}},
    // n = w
    {{"4", "20", "-", "80", "-", "4", "16", "-", "-", "48", "20", "-", "-", "96", "72", "-"}},
    // n = w+1
    {{"1", "5", "16", "20", "4", "1", "4", "12", "20", "12", "5", "4", "48", "24", "18", "16"}},
    // n = w+2
    {{"4", "20", "-", "80", "16", "4", "-", "48", "80", "-", "20", "16", "-", "96", "72", "-"}},
    // n = w+3
    {{"12", "60", "-", "240", "-", "12", "48", "-", "-", "144", "60", "-", "-", "288", "216", "-"}},
    // n = 2w
    {{"20", "-", "-", "-", "-", "20", "80", "-", "-", "240", "-", "-", "-", "480", "360", "-"}},
    // n = 2w+1
    {{"12", "60", "-", "240", "48", "12", "-", "144", "240", "-", "60", "48", "48", "288", "216", "-"}},
    // n = 2w+2
    {{"5", "-", "80", "-", "20", "5", "20", "60", "-", "60", "-", "20", "240", "120", "90", "80"}},
    // n = 2w+3
    {{"4", "20", "-", "80", "-", "4", "16", "-", "-", "48", "20", "-", "-", "96", "72", "-"}},
    // n = 3w
    {{"48", "240", "-", "960", "-", "48", "-", "-", "-", "48", "240", "-", "-", "1152", "864", "-"}},
    // n = 3w+1
    {{"24", "120", "384", "480", "96", "24", "96", "288", "480", "288", "120", "96", "1152", "-", "432", "384"}},
    // n = 3w+2
    {{"18", "90", "288", "360", "72", "18", "72", "216", "360", "216", "90", "72", "864", "432", "-", "288"}},
    // n = 3w+3
    {{"16", "80", "-", "320", "-", "16", "-", "-", "-", "-", "80", "-", "-", "384", "288", "-"}},
}};

// D = 17 grid; `true` in kTable17Bold marks printed bold-face cells (index
// equal to the SL2(O_D) index); normal-face cells are 2/3 of it.
inline const std::array<std::array<const char*, 16>, 16> kTable17 = {{
    // n = 1
    {{"1", "6", "10", "24", "4", "3", "2", "12", "24", "14", "12", "1", "40", "48", "28", "30"}},
    // n = 2
    {{"6", "-", "60", "-", "-", "-", "-", "-", "-", "84", "-", "6", "-", "-", "-", "-"}},
    // n = 3
    {{"10", "60", "-", "240", "40", "30", "20", "120", "240", "140", "120", "10", "-", "480", "280", "-"}},
    // n = 4
    {{"24", "-", "240", "-", "-", "-", "-", "-", "-", "336", "-", "24", "-", "-", "-", "-"}},
    // n = w
    {{"4", "-", "40", "-", "-", "12", "-", "48", "-", "56", "-", "4", "-", "192", "-", "120"}},
    // n = w+1
    {{"3", "-", "30", "-", "12", "-", "6", "-", "-", "42", "-", "3", "120", "-", "84", "-"}},
    // n = w+2
    {{"2", "-", "20", "-", "-", "6", "-", "24", "-", "28", "-", "2", "-", "96", "-", "60"}},
    // n = w+3
    {{"12", "-", "120", "-", "48", "-", "24", "-", "-", "168", "-", "12", "480", "-", "336", "-"}},
    // n = 2w
    {{"24", "-", "240", "-", "-", "-", "-", "-", "-", "336", "-", "24", "-", "-", "-", "-"}},
    // n = 2w+1
    {{"14", "84", "140", "336", "56", "42", "28", "168", "336", "-", "168", "14", "560", "672", "392", "420"}},
    // n = 2w+2
    {{"12", "-", "120", "-", "-", "-", "-", "-", "-", "168", "-", "12", "-", "-", "-", "-"}},
    // n = 2w+3
    {{"1", "6", "10", "24", "4", "3", "2", "12", "24", "14", "12", "1", "40", "48", "28", "30"}},
    // n = 3w
    {{"40", "-", "-", "-", "-", "120", "-", "480", "-", "560", "-", "40", "-", "1920", "-", "-"}},
    // n = 3w+1
    {{"48", "-", "480", "-", "192", "-", "96", "-", "-", "672", "-", "48", "1920", "-", "1344", "-"}},
    // n = 3w+2
    {{"28", "-", "280", "-", "-", "84", "-", "336", "-", "392", "-", "28", "-", "1344", "-", "840"}},
    // n = 3w+3
    {{"30", "-", "-", "-", "120", "-", "60", "-", "-", "420", "-", "30", "-", "-", "840", "-"}},
}};

inline const std::array<std::array<bool, 16>, 16> kTable17Bold = {{
    {{true, false, true, false, false, true, false, true, false, true, false, true, false, true, false, true}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, false, false, false, true, false, true, false, true, false, true, false, true, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, true, false, false, false, false, false, false, true, false, true, false, false, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, true, false, false, false, false, false, false, true, false, true, false, false, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, true, false, false, true, false, true, false, false, false, true, false, true, false, true}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, true, false, false, true, false, true, false, true, false, true, false, true, false, true}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, true, false, false, false, false, false, false, true, false, true, false, false, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, false, false, false, false, false, false, false, true, false, true, false, false, false, false}},
}};

inline const std::array<std::string, 16> kGridLabels = {
    "1", "2", "3", "4", "w", "1+w", "2+w", "3+w", "2*w", "1+2*w", "2+2*w", "3+2*w",
    "3*w", "1+3*w", "2+3*w", "3+3*w"};

}  // namespace teich_test

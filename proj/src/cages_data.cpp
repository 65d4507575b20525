#include "ctsp/cages_data.hpp"

namespace ctsp::detail {

// girth 3: K4, 4 vertices
const CageEntry kCage3 = {4, {
    {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
}};

// girth 4: K_3,3, 6 vertices
const CageEntry kCage4 = {6, {
    {0,3},{0,4},{0,5},{1,3},{1,4},{1,5},{2,3},{2,4},{2,5}
}};

// girth 5: Petersen, 10 vertices
const CageEntry kCage5 = {10, {
    {0,1},{0,4},{0,5},{1,2},{1,6},{2,3},{2,7},{3,4},{3,8},{4,9},
    {5,7},{5,8},{6,8},{6,9},{7,9}
}};

// girth 6: Heawood, 14 vertices
const CageEntry kCage6 = {14, {
    {0,1},{0,5},{0,13},{1,2},{1,10},{2,3},{2,7},{3,4},{3,12},{4,5},
    {4,9},{5,6},{6,7},{6,11},{7,8},{8,9},{8,13},{9,10},{10,11},{11,12},
    {12,13}
}};

// girth 7: McGee, 24 vertices
const CageEntry kCage7 = {24, {
    {0,1},{0,12},{0,23},{1,2},{1,8},{2,3},{2,19},{3,4},{3,15},{4,5},
    {4,11},{5,6},{5,22},{6,7},{6,18},{7,8},{7,14},{8,9},{9,10},{9,21},
    {10,11},{10,17},{11,12},{12,13},{13,14},{13,20},{14,15},{15,16},{16,17},{16,23},
    {17,18},{18,19},{19,20},{20,21},{21,22},{22,23}
}};

// girth 8: Tutte-Coxeter, 30 vertices
const CageEntry kCage8 = {30, {
    {0,1},{0,17},{0,29},{1,2},{1,22},{2,3},{2,9},{3,4},{3,26},{4,5},
    {4,13},{5,6},{5,18},{6,7},{6,23},{7,8},{7,28},{8,9},{8,15},{9,10},
    {10,11},{10,19},{11,12},{11,24},{12,13},{12,29},{13,14},{14,15},{14,21},{15,16},
    {16,17},{16,25},{17,18},{18,19},{19,20},{20,21},{20,27},{21,22},{22,23},{23,24},
    {24,25},{25,26},{26,27},{27,28},{28,29}
}};

// girth 9: (3,9) minimal, 58 vertices
const CageEntry kCage9 = {58, {
    {0,44},{0,45},{0,52},{1,20},{1,22},{1,51},{2,15},{2,20},{2,36},{3,4},
    {3,15},{3,52},{4,30},{4,50},{5,14},{5,43},{5,49},{6,8},{6,9},{6,38},
    {7,8},{7,25},{7,33},{8,45},{9,10},{9,50},{10,11},{10,17},{11,12},{11,56},
    {12,13},{12,51},{13,43},{13,44},{14,15},{14,27},{16,17},{16,32},{16,39},{17,18},
    {18,26},{18,28},{19,20},{19,26},{19,46},{21,22},{21,37},{21,50},{22,23},{23,24},
    {23,40},{24,27},{24,55},{25,27},{25,28},{26,29},{28,34},{29,30},{29,42},{30,57},
    {31,32},{31,33},{31,57},{32,49},{33,51},{34,35},{34,37},{35,44},{35,53},{36,38},
    {36,53},{37,48},{38,41},{39,40},{39,52},{40,41},{41,42},{42,43},{45,46},{46,47},
    {47,48},{47,56},{48,49},{53,54},{54,55},{54,57},{55,56}
}};

// girth 10: Balaban, 70 vertices
const CageEntry kCage10 = {70, {
    {0,1},{0,61},{0,69},{1,2},{1,46},{2,3},{2,53},{3,4},{3,32},{4,5},
    {4,17},{5,6},{5,40},{6,7},{6,63},{7,8},{7,48},{8,9},{8,27},{9,10},
    {9,34},{10,11},{10,19},{11,12},{11,52},{12,13},{12,41},{13,14},{13,30},{14,15},
    {14,47},{15,16},{15,36},{16,17},{16,25},{17,18},{18,19},{18,57},{19,20},{20,21},
    {20,45},{21,22},{21,38},{22,23},{22,31},{23,24},{23,62},{24,25},{24,51},{25,26},
    {26,27},{26,43},{27,28},{28,29},{28,69},{29,30},{29,56},{30,31},{31,32},{32,33},
    {33,34},{33,66},{34,35},{35,36},{35,60},{36,37},{37,38},{37,54},{38,39},{39,40},
    {39,68},{40,41},{41,42},{42,43},{42,59},{43,44},{44,45},{44,65},{45,46},{46,47},
    {47,48},{48,49},{49,50},{49,58},{50,51},{50,67},{51,52},{52,53},{53,54},{54,55},
    {55,56},{55,64},{56,57},{57,58},{58,59},{59,60},{60,61},{61,62},{62,63},{63,64},
    {64,65},{65,66},{66,67},{67,68},{68,69}
}};

// girth 11: (3,11) minimal, 112 vertices
const CageEntry kCage11 = {112, {
    {0,1},{0,25},{0,105},{1,2},{1,63},{2,3},{2,88},{3,4},{3,37},{4,5},
    {4,111},{5,6},{5,17},{6,7},{6,74},{7,8},{7,56},{8,9},{8,100},{9,10},
    {9,29},{10,11},{10,62},{11,12},{11,21},{12,13},{12,109},{13,14},{13,77},{14,15},
    {14,68},{15,16},{15,32},{16,17},{16,43},{17,18},{18,19},{18,81},{19,20},{19,103},
    {20,21},{20,53},{21,22},{22,23},{22,35},{23,24},{23,92},{24,25},{24,73},{25,26},
    {26,27},{26,47},{27,28},{27,80},{28,29},{28,39},{29,30},{30,31},{30,95},{31,32},
    {31,86},{32,33},{33,34},{33,50},{34,35},{34,58},{35,36},{36,37},{36,99},{37,38},
    {38,39},{38,69},{39,40},{40,41},{40,52},{41,42},{41,107},{42,43},{42,91},{43,44},
    {44,45},{44,61},{45,46},{45,98},{46,47},{46,54},{47,48},{48,49},{48,110},{49,50},
    {49,101},{50,51},{51,52},{51,64},{52,75},{53,54},{53,87},{54,55},{55,56},{55,67},
    {56,57},{57,58},{57,106},{58,59},{59,60},{59,79},{60,61},{60,71},{61,62},{62,63},
    {63,64},{64,65},{65,66},{65,82},{66,67},{66,93},{67,68},{68,69},{69,70},{70,71},
    {70,102},{71,72},{72,73},{72,85},{73,74},{74,75},{75,76},{76,77},{76,97},{77,78},
    {78,79},{78,89},{79,80},{80,81},{81,82},{82,83},{83,84},{83,99},{84,85},{84,108},
    {85,86},{86,87},{87,88},{88,89},{89,90},{90,91},{90,100},{91,92},{92,93},{93,94},
    {94,95},{94,111},{95,96},{96,97},{96,104},{97,98},{98,99},{100,101},{101,102},{102,103},
    {103,104},{104,105},{105,106},{106,107},{107,108},{108,109},{109,110},{110,111}
}};

const CageEntry* cage_entry(int girth) {
    switch (girth) {
        case 3: return &kCage3;
        case 4: return &kCage4;
        case 5: return &kCage5;
        case 6: return &kCage6;
        case 7: return &kCage7;
        case 8: return &kCage8;
        case 9: return &kCage9;
        case 10: return &kCage10;
        case 11: return &kCage11;
        default: return nullptr;
    }
}

}  // namespace ctsp::detail

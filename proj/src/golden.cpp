#include "rellaws/golden.hpp"

namespace rellaws::golden {

namespace {

constexpr RelationCountRow kRelationCounts[] = {
    {1, 2ull, 2ull},
    {2, 16ull, 10ull},
    {3, 512ull, 140ull},
    {4, 65536ull, 6170ull},
    {5, 33554432ull, 907452ull},
    {6, 68719476736ull, 460631444ull},
    {7, 562949953421312ull, 827507617792ull},
};

constexpr std::array<std::uint64_t, kVectorProperties> kUnprunedN5 = {
    1,       1,       32,      3163,    3163,     7776,     7776,     32768,
    47462,   59049,   59049,   154303,  467750,   1048576,  1048576,  1069742,
    1889568, 1889568, 3756619, 4498393, 5531648,  15339497, 28629151, 28629151,
};

constexpr std::array<std::uint64_t, kVectorProperties> kPrunedN5 = {
    1,     1,     6,      166,    186,    440,    1818,   1012,
    4841,  3870,  3870,   3207,   11103,  70436,  70436,  71198,
    50480, 50480, 113142, 144128, 131994, 425854, 764962, 817185,
};

constexpr MiningLevelRow kMiningLevels[] = {
    {1, 16776721, 495, 0},
    {2, 16776721, 495, 0},
    {3, 32063, 495, 16744658},
    {4, 161, 495, 16776560},
    {5, 32, 495, 16776689},
    {6, 24, 495, 16776697},
    {7, 4, 495, 16776717},
    {8, 1, 495, 16776720},
    {9, 0, 495, 16776721},
};

constexpr std::array<int, kVectorProperties> kLawsPerLevel = {
    0, 94, 122, 35, 7, 12, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
};

constexpr PublishedLaw kPublishedLaws[] = {
    {1, "Empty Univ"},
    {2, "Empty ~CoRefl"},
    {3, "Univ CoRefl"},
    {4, "Empty ~LfEucl"},
    {5, "Univ ~LfEucl"},
    {6, "CoRefl ~LfEucl"},
    {7, "Empty ~RgEucl"},
    {8, "Univ ~RgEucl"},
    {9, "CoRefl ~RgEucl"},
    {10, "Empty ~LfUnique"},
    {11, "Univ LfUnique"},
    {12, "CoRefl ~LfUnique"},
    {13, "Empty ~RgUnique"},
    {14, "Univ RgUnique"},
    {15, "CoRefl ~RgUnique"},
    {16, "Empty ~Sym"},
    {17, "Univ ~Sym"},
    {18, "CoRefl ~Sym"},
    {19, "Empty ~AntiTrans"},
    {20, "Univ AntiTrans"},
    {21, "Empty ~ASym"},
    {22, "Univ ASym"},
    {23, "Empty Connex"},
    {24, "Univ ~Connex"},
    {25, "CoRefl Connex"},
    {26, "LfUnique Connex"},
    {27, "RgUnique Connex"},
    {28, "AntiTrans Connex"},
    {29, "ASym Connex"},
    {30, "Empty ~Trans"},
    {31, "Univ ~Trans"},
    {32, "CoRefl ~Trans"},
    {33, "Empty ~SemiOrd1"},
    {34, "Univ ~SemiOrd1"},
    {35, "Connex ~SemiOrd1"},
    {36, "Empty ~Irrefl"},
    {37, "Univ Irrefl"},
    {38, "AntiTrans ~Irrefl"},
    {39, "ASym ~Irrefl"},
    {40, "Connex Irrefl"},
    {41, "Empty Refl"},
    {42, "Univ ~Refl"},
    {43, "AntiTrans Refl"},
    {44, "ASym Refl"},
    {45, "Connex ~Refl"},
    {46, "Irrefl Refl"},
    {47, "Empty ~QuasiRefl"},
    {48, "Univ ~QuasiRefl"},
    {49, "CoRefl ~QuasiRefl"},
    {50, "Connex ~QuasiRefl"},
    {51, "Refl ~QuasiRefl"},
    {52, "Empty ~AntiSym"},
    {53, "Univ AntiSym"},
    {54, "CoRefl ~AntiSym"},
    {55, "ASym ~AntiSym"},
    {56, "Empty SemiConnex"},
    {57, "Univ ~SemiConnex"},
    {58, "CoRefl SemiConnex"},
    {59, "LfUnique SemiConnex"},
    {60, "RgUnique SemiConnex"},
    {61, "AntiTrans SemiConnex"},
    {62, "Connex ~SemiConnex"},
    {63, "Empty ~IncTrans"},
    {64, "Univ ~IncTrans"},
    {65, "Connex ~IncTrans"},
    {66, "SemiConnex ~IncTrans"},
    {67, "Empty ~SemiOrd2"},
    {68, "Univ ~SemiOrd2"},
    {69, "Connex ~SemiOrd2"},
    {70, "SemiConnex ~SemiOrd2"},
    {71, "IncTrans ~SemiOrd2"},
    {72, "Empty ~QuasiTrans"},
    {73, "Univ ~QuasiTrans"},
    {74, "CoRefl ~QuasiTrans"},
    {75, "LfEucl ~QuasiTrans"},
    {76, "RgEucl ~QuasiTrans"},
    {77, "Sym ~QuasiTrans"},
    {78, "Trans ~QuasiTrans"},
    {79, "Empty ~Dense"},
    {80, "Univ ~Dense"},
    {81, "CoRefl ~Dense"},
    {82, "LfEucl ~Dense"},
    {83, "RgEucl ~Dense"},
    {84, "Connex ~Dense"},
    {85, "Refl ~Dense"},
    {86, "QuasiRefl ~Dense"},
    {87, "Empty LfSerial"},
    {88, "Univ ~LfSerial"},
    {89, "Connex ~LfSerial"},
    {90, "Refl ~LfSerial"},
    {91, "Empty RgSerial"},
    {92, "Univ ~RgSerial"},
    {93, "Connex ~RgSerial"},
    {94, "Refl ~RgSerial"},
    {95, "~CoRefl RgEucl LfUnique"},
    {96, "~CoRefl LfEucl RgUnique"},
    {97, "LfEucl RgEucl ~Sym"},
    {98, "LfEucl ~RgEucl Sym"},
    {99, "~LfEucl RgEucl Sym"},
    {100, "LfUnique ~RgUnique Sym"},
    {101, "~LfUnique RgUnique Sym"},
    {102, "~Empty CoRefl AntiTrans"},
    {103, "~Empty LfEucl AntiTrans"},
    {104, "~Empty RgEucl AntiTrans"},
    {105, "~Empty CoRefl ASym"},
    {106, "~Empty LfEucl ASym"},
    {107, "~Empty RgEucl ASym"},
    {108, "~Empty Sym ASym"},
    {109, "LfUnique ~AntiTrans ASym"},
    {110, "RgUnique ~AntiTrans ASym"},
    {111, "~Univ LfEucl Connex"},
    {112, "~Univ RgEucl Connex"},
    {113, "~Univ Sym Connex"},
    {114, "LfEucl RgEucl ~Trans"},
    {115, "LfEucl LfUnique ~Trans"},
    {116, "RgEucl RgUnique ~Trans"},
    {117, "~LfEucl Sym Trans"},
    {118, "AntiTrans ~ASym Trans"},
    {119, "AntiTrans ~ASym SemiOrd1"},
    {120, "LfUnique ~Trans SemiOrd1"},
    {121, "RgUnique ~Trans SemiOrd1"},
    {122, "AntiTrans ~Trans SemiOrd1"},
    {123, "ASym ~Trans SemiOrd1"},
    {124, "~Empty CoRefl Irrefl"},
    {125, "~Empty LfEucl Irrefl"},
    {126, "~Empty RgEucl Irrefl"},
    {127, "LfUnique ~AntiTrans Irrefl"},
    {128, "RgUnique ~AntiTrans Irrefl"},
    {129, "~ASym Trans Irrefl"},
    {130, "~ASym SemiOrd1 Irrefl"},
    {131, "LfEucl ~RgEucl Refl"},
    {132, "~LfEucl RgEucl Refl"},
    {133, "~CoRefl LfUnique Refl"},
    {134, "~CoRefl RgUnique Refl"},
    {135, "CoRefl SemiOrd1 Refl"},
    {136, "~Connex SemiOrd1 Refl"},
    {137, "LfEucl RgEucl ~QuasiRefl"},
    {138, "LfEucl ~RgEucl QuasiRefl"},
    {139, "~LfEucl RgEucl QuasiRefl"},
    {140, "~CoRefl LfUnique QuasiRefl"},
    {141, "~CoRefl RgUnique QuasiRefl"},
    {142, "~Empty AntiTrans QuasiRefl"},
    {143, "~Empty ASym QuasiRefl"},
    {144, "~Empty Irrefl QuasiRefl"},
    {145, "LfEucl LfUnique ~AntiSym"},
    {146, "LfEucl ~LfUnique AntiSym"},
    {147, "RgEucl RgUnique ~AntiSym"},
    {148, "RgEucl ~RgUnique AntiSym"},
    {149, "~CoRefl Sym AntiSym"},
    {150, "AntiTrans ~ASym AntiSym"},
    {151, "LfUnique Trans ~AntiSym"},
    {152, "RgUnique Trans ~AntiSym"},
    {153, "~ASym Irrefl AntiSym"},
    {154, "LfEucl ~Trans SemiConnex"},
    {155, "RgEucl ~Trans SemiConnex"},
    {156, "LfEucl ~SemiOrd1 SemiConnex"},
    {157, "RgEucl ~SemiOrd1 SemiConnex"},
    {158, "Trans ~SemiOrd1 SemiConnex"},
    {159, "~Connex Refl SemiConnex"},
    {160, "~Connex QuasiRefl SemiConnex"},
    {161, "~Empty CoRefl IncTrans"},
    {162, "LfEucl ~Trans IncTrans"},
    {163, "RgEucl ~Trans IncTrans"},
    {164, "LfEucl ~SemiOrd1 IncTrans"},
    {165, "RgEucl ~SemiOrd1 IncTrans"},
    {166, "Trans ~SemiOrd1 IncTrans"},
    {167, "~Connex Refl IncTrans"},
    {168, "~SemiOrd1 QuasiRefl IncTrans"},
    {169, "~Empty CoRefl SemiOrd2"},
    {170, "LfEucl ~Trans SemiOrd2"},
    {171, "RgEucl ~Trans SemiOrd2"},
    {172, "AntiTrans Trans ~SemiOrd2"},
    {173, "LfEucl ~SemiOrd1 SemiOrd2"},
    {174, "RgEucl ~SemiOrd1 SemiOrd2"},
    {175, "~Connex Refl SemiOrd2"},
    {176, "~SemiOrd1 QuasiRefl SemiOrd2"},
    {177, "LfEucl ~IncTrans SemiOrd2"},
    {178, "RgEucl ~IncTrans SemiOrd2"},
    {179, "Sym ~IncTrans SemiOrd2"},
    {180, "QuasiRefl ~IncTrans SemiOrd2"},
    {181, "ASym ~Trans QuasiTrans"},
    {182, "~Trans AntiSym QuasiTrans"},
    {183, "~LfEucl LfUnique Dense"},
    {184, "~RgEucl RgUnique Dense"},
    {185, "~Empty AntiTrans Dense"},
    {186, "~Empty ASym Dense"},
    {187, "Sym SemiOrd1 ~Dense"},
    {188, "Sym SemiConnex ~Dense"},
    {189, "~LfEucl RgEucl LfSerial"},
    {190, "~LfUnique RgUnique LfSerial"},
    {191, "AntiTrans Trans LfSerial"},
    {192, "ASym Trans LfSerial"},
    {193, "CoRefl SemiOrd1 LfSerial"},
    {194, "RgUnique SemiOrd1 LfSerial"},
    {195, "CoRefl ~Refl LfSerial"},
    {196, "RgEucl ~Refl LfSerial"},
    {197, "~Refl QuasiRefl LfSerial"},
    {198, "LfEucl SemiConnex ~LfSerial"},
    {199, "Sym SemiConnex ~LfSerial"},
    {200, "RgUnique IncTrans LfSerial"},
    {201, "LfEucl ~RgEucl RgSerial"},
    {202, "LfUnique ~RgUnique RgSerial"},
    {203, "AntiTrans Trans RgSerial"},
    {204, "ASym Trans RgSerial"},
    {205, "CoRefl SemiOrd1 RgSerial"},
    {206, "LfUnique SemiOrd1 RgSerial"},
    {207, "CoRefl ~Refl RgSerial"},
    {208, "LfEucl ~Refl RgSerial"},
    {209, "~Refl QuasiRefl RgSerial"},
    {210, "RgEucl SemiConnex ~RgSerial"},
    {211, "Sym SemiConnex ~RgSerial"},
    {212, "LfUnique IncTrans RgSerial"},
    {213, "LfUnique ~LfSerial RgSerial"},
    {214, "RgUnique LfSerial ~RgSerial"},
    {215, "Sym LfSerial ~RgSerial"},
    {216, "Sym ~LfSerial RgSerial"},
    {217, "~LfEucl LfUnique ~AntiTrans SemiOrd1"},
    {218, "~RgEucl RgUnique ~AntiTrans SemiOrd1"},
    {219, "~LfEucl Sym SemiOrd1 QuasiRefl"},
    {220, "~Empty LfUnique RgUnique IncTrans"},
    {221, "~LfEucl LfUnique ~AntiTrans IncTrans"},
    {222, "~RgEucl RgUnique ~AntiTrans IncTrans"},
    {223, "~Empty ~Connex QuasiRefl IncTrans"},
    {224, "~LfEucl LfUnique ~AntiTrans SemiOrd2"},
    {225, "~RgEucl RgUnique ~AntiTrans SemiOrd2"},
    {226, "LfUnique RgUnique ~ASym SemiOrd2"},
    {227, "Trans ~SemiOrd1 ~AntiSym SemiOrd2"},
    {228, "LfUnique ~ASym IncTrans ~QuasiTrans"},
    {229, "RgUnique ~ASym IncTrans ~QuasiTrans"},
    {230, "LfUnique ~ASym SemiOrd2 ~QuasiTrans"},
    {231, "RgUnique ~ASym SemiOrd2 ~QuasiTrans"},
    {232, "Sym ~AntiTrans IncTrans ~Dense"},
    {233, "Trans ~SemiOrd1 SemiOrd2 Dense"},
    {234, "Trans ~IncTrans SemiOrd2 Dense"},
    {235, "LfUnique Sym AntiTrans LfSerial"},
    {236, "~LfEucl LfUnique Trans LfSerial"},
    {237, "~Empty LfEucl IncTrans ~LfSerial"},
    {238, "~Empty Sym IncTrans ~LfSerial"},
    {239, "LfUnique ~ASym IncTrans ~LfSerial"},
    {240, "LfUnique ASym IncTrans LfSerial"},
    {241, "LfUnique SemiOrd1 ~IncTrans LfSerial"},
    {242, "LfUnique ~ASym SemiOrd2 ~LfSerial"},
    {243, "RgUnique ASym ~SemiOrd2 LfSerial"},
    {244, "RgUnique ~Sym QuasiTrans LfSerial"},
    {245, "~RgEucl RgUnique Trans RgSerial"},
    {246, "~Empty RgEucl IncTrans ~RgSerial"},
    {247, "RgUnique ~ASym IncTrans ~RgSerial"},
    {248, "RgUnique ASym IncTrans RgSerial"},
    {249, "RgUnique SemiOrd1 ~IncTrans RgSerial"},
    {250, "RgUnique ~ASym SemiOrd2 ~RgSerial"},
    {251, "ASym ~SemiOrd2 LfSerial RgSerial"},
    {252, "LfUnique RgUnique ~AntiTrans ~AntiSym ~QuasiTrans"},
    {253, "LfEucl Trans SemiOrd1 ~IncTrans LfSerial"},
    {254, "LfUnique RgUnique ~Trans SemiOrd2 ~LfSerial"},
    {255, "LfUnique ~AntiTrans ~AntiSym ~QuasiTrans ~LfSerial"},
    {256, "RgEucl Trans SemiOrd1 ~IncTrans RgSerial"},
    {257, "RgUnique ~AntiTrans ~AntiSym ~QuasiTrans ~RgSerial"},
    {258, "Trans ~SemiOrd1 SemiOrd2 LfSerial RgSerial"},
    {259, "~Trans SemiOrd1 AntiSym ~IncTrans ~Dense LfSerial"},
    {260, "~Trans SemiOrd1 AntiSym ~IncTrans ~Dense RgSerial"},
    {261, "~Trans SemiOrd1 AntiSym ~IncTrans LfSerial RgSerial"},
    {262, "~ASym Trans ~SemiOrd1 SemiOrd2 ~LfSerial ~RgSerial"},
    {263, "Trans ~AntiSym ~IncTrans SemiOrd2 ~LfSerial ~RgSerial"},
    {264, "Trans ~AntiSym ~IncTrans SemiOrd2 LfSerial RgSerial"},
    {265, "AntiTrans ~IncTrans SemiOrd2 QuasiTrans LfSerial RgSerial"},
    {266, "Trans ~SemiOrd1 ~AntiSym ~Dense LfSerial RgSerial"},
    {267, "~Trans SemiOrd1 AntiSym ~Dense LfSerial RgSerial"},
    {268, "Trans ~AntiSym ~SemiConnex ~Dense LfSerial RgSerial"},
    {269, "SemiOrd1 SemiConnex ~QuasiTrans ~Dense ~LfSerial ~RgSerial"},
    {270, "Irrefl SemiConnex ~QuasiTrans Dense ~LfSerial ~RgSerial"},
    {271, "Trans ~AntiSym ~SemiConnex IncTrans ~Dense ~LfSerial ~RgSerial"},
    {272, "SemiOrd1 ~IncTrans SemiOrd2 ~QuasiTrans ~Dense LfSerial ~RgSerial"},
    {273, "SemiOrd1 ~IncTrans SemiOrd2 ~QuasiTrans ~Dense ~LfSerial RgSerial"},
    {274, "~Trans SemiOrd1 ~IncTrans SemiOrd2 QuasiTrans ~Dense LfSerial RgSerial"},
};

}  // namespace

std::span<const RelationCountRow> relation_counts() { return kRelationCounts; }

const std::array<std::uint64_t, kVectorProperties>& property_counts_unpruned_n5() {
  return kUnprunedN5;
}

const std::array<std::uint64_t, kVectorProperties>& property_counts_pruned_n5() {
  return kPrunedN5;
}

std::span<const MiningLevelRow> mining_levels_n5() { return kMiningLevels; }

const std::array<int, kVectorProperties>& laws_per_level() { return kLawsPerLevel; }

std::span<const PublishedLaw> published_laws() { return kPublishedLaws; }

}  // namespace rellaws::golden

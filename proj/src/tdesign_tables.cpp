/*
Copyright 2026 The Ambisep Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "ambisep/tdesign_tables.h"

namespace ambisep {

// 36-point spherical 8-design (unit vectors). Numerically optimized so that
// the equal-weight average of every spherical harmonic of degree 1..8
// vanishes to ~1e-16; verified against the quadrature tests in this repo.
const double kTDesign8Points[36][3] = {
    {-2.16463014046850366e-01, -1.72561167862975540e-01, +9.60919563176605873e-01},
    {+4.58629335133418151e-02, +3.28858621262071993e-01, +9.43264861293560464e-01},
    {+3.66996713030275368e-01, -3.62315455074208370e-01, +8.56761882695152854e-01},
    {+5.77743652773232252e-01, +1.74106500751377319e-01, +7.97432879981979092e-01},
    {-6.69981979566298791e-01, +1.37504809065891631e-01, +7.29531750193352702e-01},
    {-7.08322712383774727e-02, -7.27426622522511557e-01, +6.82519815241070082e-01},
    {-4.01860544834428013e-01, +6.38390598190720748e-01, +6.56479662020896471e-01},
    {-6.48349912983477439e-01, -4.70492227657658357e-01, +5.98564494476619746e-01},
    {+1.86004945960189710e-01, +7.98940895179432564e-01, +5.71922727375153261e-01},
    {+7.49144708067197129e-01, -4.87238174329304496e-01, +4.48755131281148023e-01},
    {+6.89094182747520101e-01, +6.04257938220762902e-01, +4.00026938343806981e-01},
    {+9.47399960944800501e-01, +2.69456279420333678e-02, +3.18915736734015631e-01},
    {+3.14906512408763994e-01, -8.98731298130790446e-01, +3.05149049159084362e-01},
    {-9.31334649540841109e-01, +2.80251578070362439e-01, +2.32539939695765363e-01},
    {-4.45279488518181388e-01, -8.71205126749626912e-01, +2.06707049299614309e-01},
    {-9.45662015660191257e-01, -2.86844785061491137e-01, +1.53112446981070044e-01},
    {-5.90574060484096330e-01, +7.93706508758886042e-01, +1.45781538738988831e-01},
    {-3.36308719745836912e-02, +9.96144728527903811e-01, +8.10224924098113947e-02},
    {+7.04099985716186594e-01, -6.98602028952539089e-01, -1.27272995006252387e-01},
    {+4.89227158944410323e-01, +8.62449975180751727e-01, -1.29756800445685300e-01},
    {-1.03167984516481532e-02, -9.87389576959027626e-01, -1.57972741263740085e-01},
    {+8.88727755884699655e-01, +4.22604718991360873e-01, -1.77674498469473058e-01},
    {+9.52528192435703414e-01, -1.93793001247452967e-01, -2.34806974518808192e-01},
    {-6.98294946657233684e-01, -6.65293110620700179e-01, -2.64138684091527576e-01},
    {-8.31478955915582629e-01, +4.45951478899746290e-01, -3.31315596277419078e-01},
    {-8.94898157401873950e-01, -1.07359711405086475e-01, -4.33164149308027935e-01},
    {-3.36603518571718219e-01, +8.33719719369932943e-01, -4.37732225017600618e-01},
    {+3.50196217582874003e-01, -7.45819000092588724e-01, -5.66671534746134409e-01},
    {+1.97383488288279785e-01, +7.65083513572058171e-01, -6.12933092442710770e-01},
    {-2.81658392937424340e-01, -7.10551035068184733e-01, -6.44814528567276279e-01},
    {+6.43422574778433343e-01, +3.47056215823309866e-01, -6.82319113995713544e-01},
    {+6.48788436671436930e-01, -2.23963385888800853e-01, -7.27264715370309234e-01},
    {-4.41487163540653649e-01, +3.81748751972347922e-01, -8.12007989367335536e-01},
    {-5.03253202262852528e-01, -1.93539797649517176e-01, -8.42186773309797632e-01},
    {+1.00542009017633216e-01, -3.00335938978804451e-01, -9.48519703633202371e-01},
    {+9.98905158213357486e-02, +2.65739264472319103e-01, -9.58855843266681163e-01},
};

}  // namespace ambisep

// SPDX-License-Identifier: Apache-2.0
//
// aircnn: over-the-air convolution through reconfigurable intelligent surfaces
// Copyright (C) 2026 The aircnn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Optimised kernels against their serial references.

#include <benchmark/benchmark.h>

#include "aircnn/conv_lowering.hpp"
#include "aircnn/ota_transceiver.hpp"

using namespace aircnn;

namespace {

CTensor random_input(int n, int c, int size)
{
    Rng rng(1);
    ComplexGaussian g;
    CTensor x(n, c, size, size);
    for (auto &v : x.data)
        v = g(rng);
    return x;
}

void BM_unfold(benchmark::State &state)
{
    const CTensor x = random_input(static_cast<int>(state.range(0)), 8, 14);
    for (auto _ : state)
        benchmark::DoNotOptimize(unfold_input(x, ConvGeometry{3, 1, 1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_unfold_reference(benchmark::State &state)
{
    const CTensor x = random_input(static_cast<int>(state.range(0)), 8, 14);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::unfold_input(x, ConvGeometry{3, 1, 1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct MisoSetup {
    LayerShape shape{8, 16, 3};
    ChannelSet channels = sample_channel_set(1, 50, 9, 1, 3.0, 1);
    Conv2dMisoParams params;
    CPatchTensor patches;

    explicit MisoSetup(int batch)
    {
        Rng rng(2);
        params = init_conv2d_miso(shape, channels, 10.0, rng);
        patches = unfold_input(random_input(batch, 8, 14), ConvGeometry{3, 1, 1});
    }
};

void BM_conv2d_miso_forward(benchmark::State &state)
{
    const MisoSetup s(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(forward_conv2d_miso(s.params, s.channels, s.patches, NoiseSpec{1.0, 3}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_conv2d_miso_forward_reference(benchmark::State &state)
{
    const MisoSetup s(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::forward(s.params, s.channels, s.patches, NoiseSpec{1.0, 3}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_convsd_mimo_forward(benchmark::State &state)
{
    const LayerShape shape{8, 16, 3};
    const ChannelSet ch = sample_channel_set(5, 50, 9, 8, 3.0, 1);
    Rng rng(4);
    const ConvSDMimoParams p = init_convsd_mimo(shape, ch, 10.0, rng);
    const CPatchTensor x = unfold_input(random_input(static_cast<int>(state.range(0)), 8, 14), ConvGeometry{3, 1, 1});
    const bool serial = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(serial ? reference::forward(p, ch, x, NoiseSpec{1.0, 3})
                                        : forward_convsd_mimo(p, ch, x, NoiseSpec{1.0, 3}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_unfold)->Arg(16)->Arg(64);
BENCHMARK(BM_unfold_reference)->Arg(16)->Arg(64);
BENCHMARK(BM_conv2d_miso_forward)->Arg(4)->Arg(16);
BENCHMARK(BM_conv2d_miso_forward_reference)->Arg(4)->Arg(16);
BENCHMARK(BM_convsd_mimo_forward)->Args({16, 0})->Args({16, 1});

BENCHMARK_MAIN();

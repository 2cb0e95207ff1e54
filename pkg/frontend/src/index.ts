export { readPfm, writePfm, FloatMap } from './pfm';
export { readPng, writePng, Image } from './png';
export { loadLightField, loadGeometry, gridIndices, viewKey,
         LightField, ViewGeometry, ViewIndex } from './field';
export { backwardWarp, resizeBilinear, mapsToFeatureScale, Warped } from './warp';
export { Rng } from './rng';
export { Buf, Param, Layer, Activation, Conv3x3, ResBlock, UpConv, Adam,
         makeBuf, makeParam, cloneBuf, zeroGrads } from './nn';
export { TransformNet, DEFAULT_SPLIT } from './net';
export { FeatureExtractor, sharedExtractor, gramMatrix, perceptualLoss,
         perceptualGrad, proceduralStyleImage, PerceptualLoss,
         DEFAULT_STYLE_WEIGHT } from './perceptual';
export { pretrainStylizer, analyticStyle, proceduralTrainingImage,
         PretrainOptions } from './pretrain';
export { traversalOrder, OptimizerSchedule, DEFAULT_SCHEDULE } from './schedule';
export { stylizeLightField, compareLossModes, fuseFeatures, runVariantSpec,
         VARIANTS, VariantSpec, RunOptions, RunResult, ViewResult,
         LossMode, LossTarget, LossModeReport, Fusion, Optimization } from './stylize';
export { writeRunCsv, writeStylizedViews, writeRunConfig } from './report';

//! Term-by-term transcriptions of the published fidelity expressions.
//!
//! Generated from the typeset sources and left unsimplified; absolute values
//! and square roots appear exactly where they were printed.

#![allow(clippy::all)]

fn sin(x: f64) -> f64 {
    x.sin()
}

fn cos(x: f64) -> f64 {
    x.cos()
}

pub(super) fn flip_h1(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 5184.0)
        * (8.0 * cos(2.0 * t1) - 162.0 * cos(4.0 * t1)
            + 24.0 * (2.0 - 3.0 * p) * sin(t1).powi(4) * sin(4.0 * t2)
            + 8.0 * (2.0 - 15.0 * p) * sin(t1).powi(4) * cos(4.0 * t2)
            - 16.0 * (15.0 * p + 8.0) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            + 32.0 * (3.0 * p + 17.0) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 8.0
                * sin(t1).powi(2)
                * sin(2.0 * t2)
                * ((74.0 - 25.0 * p) * cos(2.0 * t1) - 19.0 * p + 110.0)
            + 16.0 * (p + 4.0) * sin(2.0 * t1).powi(2) * cos(2.0 * t2)
            + 4.0 * sin(2.0 * t1) * cos(t2) * (-(19.0 * p + 8.0) * cos(2.0 * t1) + 11.0 * p + 40.0)
            + 8.0 * sin(2.0 * t1) * sin(t2) * ((7.0 - 17.0 * p) * cos(2.0 * t1) + 13.0 * p + 41.0)
            - 60.0 * p * cos(2.0 * t1)
            + 47.0 * p * cos(4.0 * t1)
            + 13.0 * p
            + 666.0)
}

pub(super) fn flip_h2(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 2592.0)
        * (16.0 * (9.0 * p + 2.0) * sin(t1).powi(2) * sin(2.0 * t2)
            + 8.0 * (3.0 * p - 2.0) * sin(t1).powi(4) * cos(4.0 * t2)
            + 16.0 * (4.0 * p - 7.0) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            + 16.0 * (29.0 - 26.0 * p) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            - 104.0 * (p - 1.0) * sin(2.0 * t1).powi(2) * cos(2.0 * t2)
            + 4.0
                * cos(2.0 * t1)
                * (8.0 * (7.0 * p - 5.0) * sin(t1).powi(2) * sin(2.0 * t2) + 3.0 * p - 2.0)
            + 4.0 * sin(2.0 * t1) * cos(t2) * ((20.0 * p - 19.0) * cos(2.0 * t1) + 11.0)
            + 4.0 * sin(2.0 * t1) * sin(t2) * ((19.0 - 18.0 * p) * cos(2.0 * t1) - 6.0 * p + 29.0)
            + (p - 18.0) * cos(4.0 * t1)
            - 13.0 * p
            + 282.0)
}

pub(super) fn flip_h3(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 5184.0)
        * (-40.0 * cos(2.0 * t1) - 78.0 * cos(4.0 * t1)
            + 48.0 * (p - 1.0) * sin(t1).powi(4) * sin(4.0 * t2)
            + 40.0 * (p - 2.0) * sin(t1).powi(4) * cos(4.0 * t2)
            + 16.0 * (9.0 * p - 14.0) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            + 16.0 * (16.0 - 3.0 * p) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 16.0
                * sin(t1).powi(2)
                * sin(2.0 * t2)
                * ((16.0 * p + 7.0) * cos(2.0 * t1) + 10.0 * p + 13.0)
            + 16.0 * (7.0 - 8.0 * p) * sin(2.0 * t1).powi(2) * cos(2.0 * t2)
            + 4.0 * sin(2.0 * t1) * cos(t2) * ((41.0 * p - 38.0) * cos(2.0 * t1) - 9.0 * p + 22.0)
            + 4.0 * sin(2.0 * t1) * sin(t2) * ((32.0 - 21.0 * p) * cos(2.0 * t1) - 43.0 * p + 64.0)
            + 20.0 * p * cos(2.0 * t1)
            + 59.0 * p * cos(4.0 * t1)
            - 79.0 * p
            + 630.0)
}

pub(super) fn flip_h4(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 5184.0)
        * (-16.0 * cos(2.0 * t1) - 60.0 * cos(4.0 * t1) - 8.0 * p * sin(t1).powi(4) * sin(4.0 * t2)
            + 8.0 * (5.0 * p - 4.0) * sin(t1).powi(4) * cos(4.0 * t2)
            + 112.0 * (p - 2.0) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            + 32.0 * (17.0 - 12.0 * p) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 8.0
                * sin(t1).powi(2)
                * sin(2.0 * t2)
                * ((63.0 * p - 52.0) * cos(2.0 * t1) + 45.0 * p - 4.0)
            + 16.0 * (10.0 - 11.0 * p) * sin(2.0 * t1).powi(2) * cos(2.0 * t2)
            + 4.0 * sin(2.0 * t1) * cos(t2) * ((35.0 * p - 38.0) * cos(2.0 * t1) - 3.0 * p + 22.0)
            - 8.0 * sin(2.0 * t1) * sin(t2) * ((18.0 * p - 19.0) * cos(2.0 * t1) + 6.0 * p - 29.0)
            + 20.0 * p * cos(2.0 * t1)
            + 43.0 * p * cos(4.0 * t1)
            - 63.0 * p
            + 588.0)
}

pub(super) fn flip_h5(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 2592.0)
        * (12.0 * (5.0 * p - 4.0) * sin(t1).powi(4) * sin(4.0 * t2)
            + 4.0 * (13.0 * p + 20.0) * sin(t1).powi(2) * sin(2.0 * t2)
            + 8.0 * (4.0 * p - 5.0) * sin(t1).powi(4) * cos(4.0 * t2)
            + 8.0 * (10.0 - 9.0 * p) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            + 16.0 * (13.0 * p - 7.0) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 4.0 * (14.0 - 17.0 * p) * sin(2.0 * t1).powi(2) * cos(2.0 * t2)
            + 4.0
                * cos(2.0 * t1)
                * ((31.0 * p - 4.0) * sin(t1).powi(2) * sin(2.0 * t2) + 4.0 * p - 5.0)
            + 2.0 * sin(2.0 * t1) * cos(t2) * ((19.0 * p - 14.0) * cos(2.0 * t1) + 5.0 * p - 2.0)
            + 4.0 * sin(2.0 * t1) * sin(t2) * ((p + 7.0) * cos(2.0 * t1) - 37.0 * p + 41.0)
            + (38.0 * p - 39.0) * cos(4.0 * t1)
            - 54.0 * p
            + 315.0)
}

pub(super) fn phase_flip_h1(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 5184.0)
        * (2.0
            * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (16.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (3.0 * sin(4.0 * t2) + cos(4.0 * t2))
                    + sin(2.0 * t1) * (17.0 * sin(3.0 * t2) - 4.0 * cos(3.0 * t2))
                    + 55.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (74.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (7.0 * sin(t2) - 4.0 * cos(t2))
                        + 1.0)
                + 4.0 * sin(2.0 * t1) * (41.0 * sin(t2) + 20.0 * cos(t2))
                - 81.0 * cos(4.0 * t1)
                + 333.0)
            + p * (64.0 * sin(4.0 * t1) * sin(t2)
                - 8.0
                    * sin(t1).powi(2)
                    * (16.0 * cos(t1).powi(2) * cos(2.0 * t2)
                        + sin(t1).powi(2) * cos(4.0 * t2)
                        + 4.0 * sin(2.0 * t1) * (2.0 * sin(3.0 * t2) + cos(t2) - cos(3.0 * t2))
                        + 18.0 * sin(2.0 * t2))
                - 4.0 * cos(2.0 * t1) * (68.0 * sin(t1).powi(2) * sin(2.0 * t2) + 1.0)
                + 81.0 * cos(4.0 * t1)
                + 435.0))
}

pub(super) fn phase_flip_h2(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 2592.0)
        * (p * (-6.0 * sin(2.0 * t1) * sin(t2)
            + 35.0 * sin(4.0 * t1) * sin(t2)
            + 8.0
                * sin(t1).powi(2)
                * (sin(2.0 * t2) * (3.0 - 7.0 * sin(2.0 * t1) * sin(t2))
                    + sin(t1).powi(2) * cos(4.0 * t2)
                    - cos(t1) * (11.0 * sin(t1) * sin(3.0 * t2) + 26.0 * cos(t1) * cos(2.0 * t2)))
            + cos(2.0 * t1) * (4.0 - 40.0 * sin(t1).powi(2) * sin(2.0 * t2))
            + 9.0 * cos(4.0 * t1)
            + 243.0)
            - 2.0
                * (p - 1.0).abs()
                * (-58.0 * sin(2.0 * t1) * sin(t2)
                    - 4.0
                        * sin(t1)
                        * (4.0 * sin(t1) * sin(2.0 * t2)
                            + 52.0 * sin(t1) * cos(t1).powi(2) * cos(2.0 * t2)
                            - 2.0 * sin(t1).powi(3) * cos(4.0 * t2)
                            + cos(t1)
                                * (2.0
                                    * sin(t1).powi(2)
                                    * (29.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                                    + 11.0 * cos(t2)))
                    + cos(2.0 * t1)
                        * (80.0 * sin(t1).powi(2) * sin(2.0 * t2)
                            + 38.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                            + 4.0)
                    + 9.0 * cos(4.0 * t1)
                    - 141.0))
}

pub(super) fn phase_flip_h3(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 5184.0)
        * (2.0
            * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    - sin(t1).powi(2) * (3.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                    + sin(2.0 * t1) * (8.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                    + 13.0 * sin(2.0 * t2))
                + 4.0 * cos(2.0 * t1) * (14.0 * sin(t1).powi(2) * sin(2.0 * t2) - 5.0)
                + 2.0 * (22.0 * sin(2.0 * t1) - 19.0 * sin(4.0 * t1)) * cos(t2)
                + 64.0 * sin(2.0 * t1) * (cos(2.0 * t1) + 2.0) * sin(t2)
                - 39.0 * cos(4.0 * t1)
                + 315.0)
            + p * (64.0 * sin(4.0 * t1) * sin(t2)
                + 8.0
                    * sin(t1).powi(2)
                    * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                        + sin(t1).powi(2) * (5.0 * cos(4.0 * t2) - 6.0 * sin(4.0 * t2))
                        + 2.0
                            * sin(2.0 * t1)
                            * (-4.0 * sin(3.0 * t2) - 5.0 * cos(t2) + 5.0 * cos(3.0 * t2))
                        + 6.0 * sin(2.0 * t2))
                + 4.0 * cos(2.0 * t1) * (4.0 * sin(t1).powi(2) * sin(2.0 * t2) + 5.0)
                + 39.0 * cos(4.0 * t1)
                + 453.0))
}

pub(super) fn phase_flip_h4(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 2592.0)
        * (p * (6.0 * sin(2.0 * t1) * sin(t2)
            + 29.0 * sin(4.0 * t1) * sin(t2)
            + 8.0
                * sin(t1).powi(2)
                * (-20.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * cos(4.0 * t2)
                    + sin(t1)
                        * cos(t1)
                        * (-5.0 * sin(3.0 * t2) - 7.0 * cos(t2) + 7.0 * cos(3.0 * t2))
                    + 6.0 * sin(2.0 * t2))
            + cos(2.0 * t1) * (4.0 - 16.0 * sin(t1).powi(2) * sin(2.0 * t2))
            + 15.0 * cos(4.0 * t1)
            + 237.0)
            - 2.0
                * (p - 1.0).abs()
                * (8.0
                    * sin(t1).powi(2)
                    * (-20.0 * cos(t1).powi(2) * cos(2.0 * t2)
                        + sin(t1).powi(2) * cos(4.0 * t2)
                        + sin(t1) * cos(t1) * (7.0 * cos(3.0 * t2) - 17.0 * sin(3.0 * t2))
                        + sin(2.0 * t2))
                    + 19.0 * sin(4.0 * t1) * cos(t2)
                    - 2.0 * sin(2.0 * t1) * (29.0 * sin(t2) + 11.0 * cos(t2))
                    + cos(2.0 * t1)
                        * (4.0 * sin(t1) * sin(t2) * (52.0 * sin(t1) * cos(t2) - 19.0 * cos(t1))
                            + 4.0)
                    + 15.0 * cos(4.0 * t1)
                    - 147.0))
}

pub(super) fn phase_flip_h5(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 5184.0)
        * (-2.0
            * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (6.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                    + sin(2.0 * t1) * (7.0 * sin(3.0 * t2) - 5.0 * cos(3.0 * t2))
                    - 10.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (4.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + 7.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                        + 5.0)
                + 4.0 * sin(2.0 * t1) * (cos(t2) - 41.0 * sin(t2))
                + 39.0 * cos(4.0 * t1)
                - 315.0)
            + p * (-224.0 * sin(t1).powi(2) * cos(t1).powi(2) * cos(2.0 * t2)
                + 20.0 * cos(2.0 * t1)
                + 39.0 * cos(4.0 * t1)
                + 453.0)
            + 8.0
                * p
                * sin(t1)
                * (-6.0 * sin(t1).powi(3) * sin(4.0 * t2)
                    - 8.0 * sin(2.0 * t1) * sin(t1) * sin(3.0 * t2)
                    + 4.0 * (2.0 * sin(t1) + sin(3.0 * t1)) * sin(2.0 * t2)
                    + 5.0 * sin(t1).powi(3) * cos(4.0 * t2)
                    + 8.0
                        * cos(t1)
                        * sin(t2)
                        * (sin(t1).powi(2) * sin(2.0 * t2) + cos(2.0 * t1) + 3.0)))
}

pub(super) fn depolarizing_h1(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 23328.0)
        * ((9.0 - 8.0 * p).abs()
            * (8.0
                * sin(t1).powi(2)
                * (16.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (3.0 * sin(4.0 * t2) + cos(4.0 * t2))
                    + sin(2.0 * t1) * (17.0 * sin(3.0 * t2) - 4.0 * cos(3.0 * t2))
                    + 55.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (74.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (7.0 * sin(t2) - 4.0 * cos(t2))
                        + 1.0)
                + 4.0 * sin(2.0 * t1) * (41.0 * sin(t2) + 20.0 * cos(t2))
                - 81.0 * cos(4.0 * t1)
                + 333.0)
            + p * (-128.0 * sin(t1).powi(2) * cos(t1).powi(2) * cos(2.0 * t2)
                - 4.0 * cos(2.0 * t1)
                + 81.0 * cos(4.0 * t1)
                + 1971.0)
            + 8.0
                * p
                * sin(t1)
                * (cos(t1)
                    * (4.0 * (cos(2.0 * t1) + 7.0) * cos(t2)
                        + 8.0 * sin(t1).powi(2) * cos(3.0 * t2)
                        + (29.0 * cos(2.0 * t1) + 139.0) * sin(t2))
                    - sin(t1)
                        * (5.0 * sin(2.0 * t1) * sin(3.0 * t2)
                            + sin(t1).powi(2) * (9.0 * sin(4.0 * t2) + cos(4.0 * t2))
                            + (43.0 * cos(2.0 * t1) - 35.0) * sin(2.0 * t2))))
}

pub(super) fn depolarizing_h2(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 11664.0)
        * ((9.0 - 8.0 * p).abs()
            * (58.0 * sin(2.0 * t1) * sin(t2)
                + 8.0
                    * sin(t1).powi(2)
                    * (26.0 * cos(t1).powi(2) * cos(2.0 * t2) - sin(t1).powi(2) * cos(4.0 * t2)
                        + sin(t1) * cos(t1) * (29.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                        + 2.0 * sin(2.0 * t2))
                - 4.0 * cos(2.0 * t1) * (20.0 * sin(t1).powi(2) * sin(2.0 * t2) + 1.0)
                + 44.0 * sin(t1) * cos(t1) * cos(t2)
                + 19.0 * sin(4.0 * t1) * (sin(t2) - cos(t2))
                - 9.0 * cos(4.0 * t1)
                + 141.0)
            + 4.0
                * p
                * sin(t1)
                * (-52.0 * sin(t1) * cos(t1).powi(2) * cos(2.0 * t2)
                    + 2.0 * sin(t1).powi(3) * cos(4.0 * t2)
                    + cos(t1)
                        * ((19.0 * cos(2.0 * t1) + 13.0) * cos(t2)
                            + 2.0
                                * sin(t1).powi(2)
                                * (7.0 * cos(3.0 * t2) - 11.0 * sin(3.0 * t2))
                            + (35.0 * cos(2.0 * t1) + 61.0) * sin(t2))
                    + 4.0 * sin(t1) * (11.0 - 4.0 * cos(2.0 * t1)) * sin(2.0 * t2))
            + p * (4.0 * cos(2.0 * t1) + 9.0 * cos(4.0 * t1) + 1011.0))
}

pub(super) fn depolarizing_h3(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 23328.0)
        * ((9.0 - 8.0 * p).abs()
            * (8.0
                * sin(t1).powi(2)
                * (28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    - sin(t1).powi(2) * (3.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                    + sin(2.0 * t1) * (8.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                    + 13.0 * sin(2.0 * t2))
                + 4.0 * cos(2.0 * t1) * (14.0 * sin(t1).powi(2) * sin(2.0 * t2) - 5.0)
                + 2.0 * (22.0 * sin(2.0 * t1) - 19.0 * sin(4.0 * t1)) * cos(t2)
                + 64.0 * sin(2.0 * t1) * (cos(2.0 * t1) + 2.0) * sin(t2)
                - 39.0 * cos(4.0 * t1)
                + 315.0)
            + p * (8.0
                * sin(t1).powi(2)
                * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (5.0 * cos(4.0 * t2) - 9.0 * sin(4.0 * t2))
                    + sin(2.0 * t1) * (7.0 * cos(3.0 * t2) - 2.0 * sin(3.0 * t2))
                    - 13.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (-14.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (26.0 * sin(t2) + 19.0 * cos(t2))
                        + 5.0)
                - 44.0 * sin(2.0 * t1) * (cos(t2) - 2.0 * sin(t2))
                + 39.0 * cos(4.0 * t1)
                + 1989.0))
}

pub(super) fn depolarizing_h4(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 11664.0)
        * ((9.0 - 8.0 * p).abs()
            * (58.0 * sin(2.0 * t1) * sin(t2)
                + 4.0
                    * sin(t1)
                    * (40.0 * sin(t1) * cos(t1).powi(2) * cos(2.0 * t2)
                        + cos(t1)
                            * (2.0
                                * sin(t1).powi(2)
                                * (17.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                                + 11.0 * cos(t2))
                        - 2.0 * sin(t1) * (sin(t1).powi(2) * cos(4.0 * t2) + sin(2.0 * t2)))
                - 2.0
                    * cos(2.0 * t1)
                    * (52.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + 19.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                        + 2.0)
                - 15.0 * cos(4.0 * t1)
                + 147.0)
            + 4.0
                * p
                * sin(t1)
                * (-40.0 * sin(t1) * cos(t1).powi(2) * cos(2.0 * t2)
                    + 2.0 * sin(t1).powi(3) * cos(4.0 * t2)
                    + cos(t1)
                        * ((19.0 * cos(2.0 * t1) + 13.0) * cos(t2)
                            + 2.0 * sin(t1).powi(2) * (sin(3.0 * t2) + 7.0 * cos(3.0 * t2))
                            + (35.0 * cos(2.0 * t1) + 61.0) * sin(t2))
                    - 10.0 * sin(t1) * (cos(2.0 * t1) - 5.0) * sin(2.0 * t2))
            + p * (4.0 * cos(2.0 * t1) + 15.0 * (cos(4.0 * t1) + 67.0)))
}

pub(super) fn depolarizing_h5(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 23328.0)
        * (p * (8.0
            * sin(t1).powi(2)
            * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                + 5.0 * sin(t1).powi(2) * cos(4.0 * t2)
                + sin(2.0 * t1) * (sin(3.0 * t2) - 5.0 * cos(3.0 * t2))
                + 20.0 * sin(2.0 * t2))
            + 4.0
                * cos(2.0 * t1)
                * (16.0 * sin(t1).powi(2) * sin(2.0 * t2)
                    + sin(2.0 * t1) * (7.0 * cos(t2) - sin(t2))
                    + 5.0)
            + 4.0 * sin(2.0 * t1) * (25.0 * sin(t2) + cos(t2))
            + 39.0 * cos(4.0 * t1)
            + 1989.0)
            - (9.0 - 8.0 * p).abs()
                * (8.0
                    * sin(t1).powi(2)
                    * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                        + sin(t1).powi(2) * (6.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                        + sin(2.0 * t1) * (7.0 * sin(3.0 * t2) - 5.0 * cos(3.0 * t2))
                        - 10.0 * sin(2.0 * t2))
                    + 4.0
                        * cos(2.0 * t1)
                        * (4.0 * sin(t1).powi(2) * sin(2.0 * t2)
                            + 7.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                            + 5.0)
                    + 4.0 * sin(2.0 * t1) * (cos(t2) - 41.0 * sin(t2))
                    + 39.0 * cos(4.0 * t1)
                    - 315.0))
}

pub(super) fn amplitude_damping_h1(t1: f64, t2: f64, p: f64) -> f64 {
    let sq = (1.0 - p).sqrt();
    (1.0 / 15552.0)
        * (-48.0 * sq * sin(2.0 * (t1 + t2)) - 66.0 * sq * sin(4.0 * t1 + 2.0 * t2)
            + 84.0 * sq * sin(2.0 * t1 - t2)
            + 6.0 * sq * sin(4.0 * t1 - t2)
            + 84.0 * sq * sin(2.0 * t1 + t2)
            + 6.0 * sq * sin(4.0 * t1 + t2)
            + 48.0 * sq * sin(2.0 * t1 - 2.0 * t2)
            + 66.0 * sq * sin(4.0 * t1 - 2.0 * t2)
            - 64.0
                * sin(t1)
                * cos(t1).powi(3)
                * ((3.0 * sq + 5.0) * cos(t2) - (7.0 * sq + 11.0) * sin(t2))
            + 576.0 * sq * sin(t1).powi(2) * cos(t1).powi(2) * cos(2.0 * t2)
            - 48.0 * sq * sin(t1).powi(4) * cos(4.0 * t2)
            + 24.0
                * sin(t1).powi(4)
                * ((3.0 - 4.0 * p) * sin(4.0 * t2) - 3.0 * (p - 1.0) * cos(4.0 * t2))
            + 16.0
                * sin(t1).powi(3)
                * cos(t1)
                * (13.0 * sin(t2) + 17.0 * sin(3.0 * t2) - 3.0 * cos(3.0 * t2)
                    + (3.0 * sq - 11.0) * cos(t2)
                    + sq * (38.0 * sin(t2) + 34.0 * sin(3.0 * t2) - 9.0 * cos(3.0 * t2)))
            + 8.0
                * sin(t1).powi(2)
                * (2.0
                    * p
                    * sin(2.0 * t1)
                    * (-7.0 * sin(3.0 * t2) - 3.0 * cos(t2) + 3.0 * cos(3.0 * t2))
                    + 3.0 * (25.0 - 18.0 * p) * sin(2.0 * t2)
                    + 12.0 * (3.0 * p - 1.0) * cos(2.0 * t2))
            - 12.0
                * cos(2.0 * t1)
                * (2.0
                    * sin(t1).powi(2)
                    * ((22.0 * p - 15.0) * sin(2.0 * t2) - 4.0 * (p - 1.0) * cos(2.0 * t2))
                    - 21.0 * p
                    + 2.0 * sq
                    - 3.0)
            + 8.0 * sin(2.0 * t1) * (29.0 * cos(t2) + 21.0 * p * sin(t2))
            + 4.0 * sin(4.0 * t1) * (3.0 * cos(t2) + 31.0 * p * sin(t2))
            - 81.0 * (-p + 2.0 * sq + 1.0) * cos(4.0 * t1)
            + 228.0 * sq * sin(2.0 * t2)
            + 51.0 * p
            + 186.0 * sq
            + 813.0)
}

pub(super) fn amplitude_damping_h2(t1: f64, t2: f64, p: f64) -> f64 {
    let sq = (1.0 - p).sqrt();
    (1.0 / 15552.0)
        * (-24.0 * p * sin(t1).powi(4) * sin(4.0 * t2)
            + 24.0 * (9.0 * p - 2.0) * sin(t1).powi(2) * sin(2.0 * t2)
            - 27.0 * sq * sin(4.0 * t1 - t2)
            - 48.0 * sq * sin(2.0 * (t1 + t2))
            - 27.0 * sq * sin(4.0 * t1 + t2)
            - 30.0 * sq * sin(2.0 * t1 + 3.0 * t2)
            - 6.0 * sq * sin(4.0 * t1 - 2.0 * t2)
            - 30.0 * sq * sin(2.0 * t1 - 3.0 * t2)
            + 54.0 * sq * sin(2.0 * t1 - t2)
            + 54.0 * sq * sin(2.0 * t1 + t2)
            + 6.0 * sq * sin(4.0 * t1 + 2.0 * t2)
            + 15.0 * sq * sin(4.0 * t1 + 3.0 * t2)
            + 48.0 * sq * sin(2.0 * t1 - 2.0 * t2)
            + 15.0 * sq * sin(4.0 * t1 - 3.0 * t2)
            - 3.0 * sq * cos(4.0 * (t1 + t2))
            - 96.0 * sq * cos(2.0 * t1 + t2)
            - 8.0 * sq * cos(4.0 * t1 + t2)
            - 60.0 * sq * cos(4.0 * t1 + 2.0 * t2)
            - 104.0 * sq * cos(2.0 * t1 + 3.0 * t2)
            - 60.0 * sq * cos(4.0 * t1 - 2.0 * t2)
            - 52.0 * sq * cos(4.0 * t1 - 3.0 * t2)
            - 3.0 * sq * cos(4.0 * t1 - 4.0 * t2)
            + 96.0 * sq * cos(2.0 * t1 - t2)
            + 8.0 * sq * cos(4.0 * t1 - t2)
            + 52.0 * sq * cos(4.0 * t1 + 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 + 4.0 * t2)
            + 104.0 * sq * cos(2.0 * t1 - 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 - 4.0 * t2)
            + 96.0 * (p - 1.0) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            - 560.0 * (p - 1.0) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 48.0 * (p + 3.0) * sin(t1).powi(2) * cos(2.0 * t2)
            - 24.0
                * cos(2.0 * t1)
                * (sin(t1).powi(2)
                    * ((18.0 - 11.0 * p) * sin(2.0 * t2) + 6.0 * (p - 1.0) * cos(2.0 * t2))
                    - 12.0 * p
                    + sq)
            + 24.0 * sin(2.0 * t1) * cos(t2) * ((7.0 * p - 5.0) * cos(2.0 * t1) + p + 1.0)
            + 4.0 * sin(2.0 * t1) * sin(t2) * ((23.0 * p + 49.0) * cos(2.0 * t1) + 33.0 * p + 39.0)
            - 6.0 * (2.0 * p + 11.0 * sq - 2.0) * cos(4.0 * t1)
            + 84.0 * sq * sin(2.0 * t2)
            - 18.0 * sq * cos(4.0 * t2)
            + 120.0 * sq * cos(2.0 * t2)
            + 108.0 * (p + 7.0)
            + 90.0 * sq)
}

pub(super) fn amplitude_damping_h3(t1: f64, t2: f64, p: f64) -> f64 {
    let sq = (1.0 - p).sqrt();
    (5.0 / 7776.0)
        * (-24.0 * sin(t1).powi(4) * sin(4.0 * t2)
            - 27.0 * sq * sin(4.0 * t1 - t2)
            - 24.0 * sq * sin(2.0 * (t1 + t2))
            - 3.0 * sq * sin(4.0 * (t1 + t2))
            - 27.0 * sq * sin(4.0 * t1 + t2)
            - 18.0 * sq * sin(4.0 * t1 + 2.0 * t2)
            - 30.0 * sq * sin(2.0 * t1 + 3.0 * t2)
            - 30.0 * sq * sin(2.0 * t1 - 3.0 * t2)
            - 12.0 * sq * sin(2.0 * t1 - 4.0 * t2)
            + 54.0 * sq * sin(2.0 * t1 - t2)
            + 54.0 * sq * sin(2.0 * t1 + t2)
            + 15.0 * sq * sin(4.0 * t1 + 3.0 * t2)
            + 12.0 * sq * sin(2.0 * t1 + 4.0 * t2)
            + 24.0 * sq * sin(2.0 * t1 - 2.0 * t2)
            + 18.0 * sq * sin(4.0 * t1 - 2.0 * t2)
            + 15.0 * sq * sin(4.0 * t1 - 3.0 * t2)
            + 3.0 * sq * sin(4.0 * t1 - 4.0 * t2)
            - 3.0 * sq * cos(4.0 * (t1 + t2))
            - 102.0 * sq * cos(2.0 * t1 + t2)
            - 5.0 * sq * cos(4.0 * t1 + t2)
            - 36.0 * sq * cos(4.0 * t1 + 2.0 * t2)
            - 38.0 * sq * cos(2.0 * t1 + 3.0 * t2)
            - 36.0 * sq * cos(4.0 * t1 - 2.0 * t2)
            - 19.0 * sq * cos(4.0 * t1 - 3.0 * t2)
            - 3.0 * sq * cos(4.0 * t1 - 4.0 * t2)
            + 102.0 * sq * cos(2.0 * t1 - t2)
            + 5.0 * sq * cos(4.0 * t1 - t2)
            + 19.0 * sq * cos(4.0 * t1 + 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 + 4.0 * t2)
            + 38.0 * sq * cos(2.0 * t1 - 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 - 4.0 * t2)
            + 72.0 * (p - 1.0) * sin(t1).powi(4) * cos(4.0 * t2)
            + 48.0 * (p - 2.0) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            + 16.0 * (5.0 - 2.0 * p) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 48.0 * sin(t1).powi(2) * cos(2.0 * t2) * (-(p - 1.0) * cos(2.0 * t1) + 3.0 * p + 1.0)
            - 24.0 * (2.0 * p - 1.0) * sin(t1).powi(2) * (cos(2.0 * t1) + 3.0) * sin(2.0 * t2)
            + 12.0 * sin(2.0 * t1) * cos(t2) * ((17.0 * p - 10.0) * cos(2.0 * t1) - p + 2.0)
            + 4.0 * sin(2.0 * t1) * sin(t2) * ((43.0 - 10.0 * p) * cos(2.0 * t1) - 6.0 * p + 45.0)
            + 36.0 * (9.0 * p - 1.0) * cos(2.0 * t1)
            - 24.0 * sq * cos(2.0 * t1)
            + 3.0 * (p - 1.0) * cos(4.0 * t1)
            - 114.0 * sq * cos(4.0 * t1)
            - 18.0 * sq * sin(4.0 * t2)
            + 84.0 * sq * sin(2.0 * t2)
            - 18.0 * sq * cos(4.0 * t2)
            + 72.0 * sq * cos(2.0 * t2)
            + 57.0 * p
            + 138.0 * sq
            + 807.0)
}

pub(super) fn amplitude_damping_h4(t1: f64, t2: f64, p: f64) -> f64 {
    let sq = (1.0 - p).sqrt();
    (5.0 / 7776.0)
        * (-24.0 * p * sin(t1).powi(4) * sin(4.0 * t2)
            + 24.0 * (9.0 * p - 2.0) * sin(t1).powi(2) * sin(2.0 * t2)
            - 27.0 * sq * sin(4.0 * t1 - t2)
            - 48.0 * sq * sin(2.0 * (t1 + t2))
            - 27.0 * sq * sin(4.0 * t1 + t2)
            - 30.0 * sq * sin(2.0 * t1 + 3.0 * t2)
            - 24.0 * sq * sin(4.0 * t1 - 2.0 * t2)
            - 30.0 * sq * sin(2.0 * t1 - 3.0 * t2)
            + 54.0 * sq * sin(2.0 * t1 - t2)
            + 54.0 * sq * sin(2.0 * t1 + t2)
            + 24.0 * sq * sin(4.0 * t1 + 2.0 * t2)
            + 15.0 * sq * sin(4.0 * t1 + 3.0 * t2)
            + 48.0 * sq * sin(2.0 * t1 - 2.0 * t2)
            + 15.0 * sq * sin(4.0 * t1 - 3.0 * t2)
            - 3.0 * sq * cos(4.0 * (t1 + t2))
            - 108.0 * sq * cos(2.0 * t1 + t2)
            - 2.0 * sq * cos(4.0 * t1 + t2)
            - 42.0 * sq * cos(4.0 * t1 + 2.0 * t2)
            - 68.0 * sq * cos(2.0 * t1 + 3.0 * t2)
            - 42.0 * sq * cos(4.0 * t1 - 2.0 * t2)
            - 34.0 * sq * cos(4.0 * t1 - 3.0 * t2)
            - 3.0 * sq * cos(4.0 * t1 - 4.0 * t2)
            + 108.0 * sq * cos(2.0 * t1 - t2)
            + 2.0 * sq * cos(4.0 * t1 - t2)
            + 34.0 * sq * cos(4.0 * t1 + 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 + 4.0 * t2)
            + 68.0 * sq * cos(2.0 * t1 - 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 - 4.0 * t2)
            + 96.0 * (p - 1.0) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            - 272.0 * (p - 1.0) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 48.0 * (p + 3.0) * sin(t1).powi(2) * cos(2.0 * t2)
            - 24.0
                * cos(2.0 * t1)
                * (sin(t1).powi(2)
                    * ((18.0 - 11.0 * p) * sin(2.0 * t2) + 6.0 * (p - 1.0) * cos(2.0 * t2))
                    - 12.0 * p
                    + sq)
            + 24.0 * sin(2.0 * t1) * cos(t2) * ((7.0 * p - 5.0) * cos(2.0 * t1) + p + 1.0)
            + 4.0 * sin(2.0 * t1) * sin(t2) * ((17.0 * p + 55.0) * cos(2.0 * t1) + 39.0 * p + 33.0)
            - 6.0 * (2.0 * p + 17.0 * sq - 2.0) * cos(4.0 * t1)
            + 48.0 * sq * sin(2.0 * t2)
            - 18.0 * sq * cos(4.0 * t2)
            + 84.0 * sq * cos(2.0 * t2)
            + 108.0 * (p + 7.0)
            + 126.0 * sq)
}

pub(super) fn amplitude_damping_h5(t1: f64, t2: f64, p: f64) -> f64 {
    let sq = (1.0 - p).sqrt();
    (5.0 / 7776.0)
        * (24.0 * (5.0 * p - 4.0) * sin(t1).powi(4) * sin(4.0 * t2)
            - 6.0 * sq * sin(4.0 * t1 - t2)
            - 24.0 * sq * sin(2.0 * (t1 + t2))
            - 3.0 * sq * sin(4.0 * (t1 + t2))
            - 6.0 * sq * sin(4.0 * t1 + t2)
            - 6.0 * sq * sin(4.0 * t1 + 3.0 * t2)
            - 6.0 * sq * sin(4.0 * t1 - 3.0 * t2)
            - 12.0 * sq * sin(2.0 * t1 - 4.0 * t2)
            + 12.0 * sq * sin(2.0 * t1 - t2)
            + 12.0 * sq * sin(2.0 * t1 + t2)
            + 12.0 * sq * sin(2.0 * t1 + 3.0 * t2)
            + 12.0 * sq * sin(2.0 * t1 + 4.0 * t2)
            + 24.0 * sq * sin(2.0 * t1 - 2.0 * t2)
            + 12.0 * sq * sin(2.0 * t1 - 3.0 * t2)
            + 3.0 * sq * sin(4.0 * t1 - 4.0 * t2)
            - sq * cos(4.0 * t1 - t2)
            - 3.0 * sq * cos(4.0 * (t1 + t2))
            - 114.0 * sq * cos(2.0 * t1 + t2)
            - 36.0 * sq * cos(4.0 * t1 + 2.0 * t2)
            - 2.0 * sq * cos(2.0 * t1 + 3.0 * t2)
            - 36.0 * sq * cos(4.0 * t1 - 2.0 * t2)
            - sq * cos(4.0 * t1 - 3.0 * t2)
            - 3.0 * sq * cos(4.0 * t1 - 4.0 * t2)
            + 114.0 * sq * cos(2.0 * t1 - t2)
            + sq * cos(4.0 * t1 + t2)
            + sq * cos(4.0 * t1 + 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 + 4.0 * t2)
            + 2.0 * sq * cos(2.0 * t1 - 3.0 * t2)
            + 12.0 * sq * cos(2.0 * t1 - 4.0 * t2)
            + 72.0 * (p - 1.0) * sin(t1).powi(4) * cos(4.0 * t2)
            + 48.0 * (3.0 - 4.0 * p) * sin(t1).powi(3) * cos(t1) * cos(3.0 * t2)
            + 16.0 * (25.0 * p - 22.0) * sin(t1).powi(3) * cos(t1) * sin(3.0 * t2)
            + 48.0 * sin(t1).powi(2) * cos(2.0 * t2) * (-(p - 1.0) * cos(2.0 * t1) + 3.0 * p + 1.0)
            + 24.0 * sin(t1).powi(2) * sin(2.0 * t2) * ((p - 2.0) * cos(2.0 * t1) - 5.0 * p + 6.0)
            + 12.0 * sin(2.0 * t1) * cos(t2) * ((12.0 * p - 5.0) * cos(2.0 * t1) + 4.0 * p - 3.0)
            - 4.0 * sin(2.0 * t1) * sin(t2) * ((p - 22.0) * cos(2.0 * t1) + 39.0 * p - 66.0)
            + 36.0 * (9.0 * p - 1.0) * cos(2.0 * t1)
            - 24.0 * sq * cos(2.0 * t1)
            + 3.0 * (p - 1.0) * cos(4.0 * t1)
            - 114.0 * sq * cos(4.0 * t1)
            - 18.0 * sq * sin(4.0 * t2)
            + 48.0 * sq * sin(2.0 * t2)
            - 18.0 * sq * cos(4.0 * t2)
            + 72.0 * sq * cos(2.0 * t2)
            + 57.0 * p
            + 138.0 * sq
            + 807.0)
}

pub(super) fn dephasing_h1(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 20736.0)
        * (8.0
            * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (16.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (3.0 * sin(4.0 * t2) + cos(4.0 * t2))
                    + sin(2.0 * t1) * (17.0 * sin(3.0 * t2) - 4.0 * cos(3.0 * t2))
                    + 55.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (74.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (7.0 * sin(t2) - 4.0 * cos(t2))
                        + 1.0)
                + 4.0 * sin(2.0 * t1) * (41.0 * sin(t2) + 20.0 * cos(t2))
                - 81.0 * cos(4.0 * t1)
                + 333.0)
            + p * (-8.0
                * sin(t1).powi(2)
                * (16.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (9.0 * sin(4.0 * t2) + cos(4.0 * t2))
                    + sin(2.0 * t1) * (5.0 * sin(3.0 * t2) - 4.0 * cos(3.0 * t2))
                    - 35.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (-86.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (29.0 * sin(t2) + 4.0 * cos(t2))
                        - 1.0)
                + 4.0 * sin(2.0 * t1) * (139.0 * sin(t2) + 28.0 * cos(t2))
                + 81.0 * cos(4.0 * t1)
                + 1971.0))
}

pub(super) fn dephasing_h2(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 10368.0)
        * (-8.0
            * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (-26.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * cos(4.0 * t2)
                    + sin(t1) * cos(t1) * (7.0 * cos(3.0 * t2) - 29.0 * sin(3.0 * t2))
                    - 2.0 * sin(2.0 * t2))
                + cos(2.0 * t1)
                    * (80.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + 38.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                        + 4.0)
                - 2.0 * sin(2.0 * t1) * (29.0 * sin(t2) + 11.0 * cos(t2))
                + 9.0 * cos(4.0 * t1)
                - 141.0)
            + 4.0
                * p
                * sin(t1)
                * (-52.0 * sin(t1) * cos(t1).powi(2) * cos(2.0 * t2)
                    + 2.0 * sin(t1).powi(3) * cos(4.0 * t2)
                    + cos(t1)
                        * ((19.0 * cos(2.0 * t1) + 13.0) * cos(t2)
                            + 2.0
                                * sin(t1).powi(2)
                                * (7.0 * cos(3.0 * t2) - 11.0 * sin(3.0 * t2))
                            + (35.0 * cos(2.0 * t1) + 61.0) * sin(t2))
                    + 4.0 * sin(t1) * (11.0 - 4.0 * cos(2.0 * t1)) * sin(2.0 * t2))
            + p * (4.0 * cos(2.0 * t1) + 9.0 * cos(4.0 * t1) + 1011.0))
}

pub(super) fn dephasing_h3(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 20736.0)
        * (8.0
            * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    - sin(t1).powi(2) * (3.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                    + sin(2.0 * t1) * (8.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                    + 13.0 * sin(2.0 * t2))
                + 4.0 * cos(2.0 * t1) * (14.0 * sin(t1).powi(2) * sin(2.0 * t2) - 5.0)
                + 2.0 * (22.0 * sin(2.0 * t1) - 19.0 * sin(4.0 * t1)) * cos(t2)
                + 64.0 * sin(2.0 * t1) * (cos(2.0 * t1) + 2.0) * sin(t2)
                - 39.0 * cos(4.0 * t1)
                + 315.0)
            + p * (8.0
                * sin(t1).powi(2)
                * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (5.0 * cos(4.0 * t2) - 9.0 * sin(4.0 * t2))
                    + sin(2.0 * t1) * (7.0 * cos(3.0 * t2) - 2.0 * sin(3.0 * t2))
                    - 13.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (-14.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (26.0 * sin(t2) + 19.0 * cos(t2))
                        + 5.0)
                - 44.0 * sin(2.0 * t1) * (cos(t2) - 2.0 * sin(t2))
                + 39.0 * cos(4.0 * t1)
                + 1989.0))
}

pub(super) fn dephasing_h4(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 10368.0)
        * (p * (8.0
            * sin(t1).powi(2)
            * (-20.0 * cos(t1).powi(2) * cos(2.0 * t2)
                + sin(t1).powi(2) * cos(4.0 * t2)
                + sin(t1) * cos(t1) * (sin(3.0 * t2) + 7.0 * cos(3.0 * t2))
                + 25.0 * sin(2.0 * t2))
            + 2.0 * sin(2.0 * t1) * (61.0 * sin(t2) + 13.0 * cos(t2))
            + 4.0
                * cos(2.0 * t1)
                * (19.0 * sin(t1) * cos(t1) * cos(t2)
                    + 5.0 * sin(t1) * sin(t2) * (7.0 * cos(t1) - 4.0 * sin(t1) * cos(t2))
                    + 1.0)
            + 15.0 * cos(4.0 * t1)
            + 1005.0)
            - 8.0
                * (p - 1.0).abs()
                * (-58.0 * sin(2.0 * t1) * sin(t2)
                    + 8.0
                        * sin(t1).powi(2)
                        * (-20.0 * cos(t1).powi(2) * cos(2.0 * t2)
                            + sin(t1).powi(2) * cos(4.0 * t2)
                            + sin(t1) * cos(t1) * (7.0 * cos(3.0 * t2) - 17.0 * sin(3.0 * t2))
                            + sin(2.0 * t2))
                    - 44.0 * sin(t1) * cos(t1) * cos(t2)
                    + 19.0 * sin(4.0 * t1) * cos(t2)
                    + cos(2.0 * t1)
                        * (4.0 * sin(t1) * sin(t2) * (52.0 * sin(t1) * cos(t2) - 19.0 * cos(t1))
                            + 4.0)
                    + 15.0 * cos(4.0 * t1)
                    - 147.0))
}

pub(super) fn dephasing_h5(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 20736.0)
        * (p * (8.0
            * sin(t1).powi(2)
            * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                + 5.0 * sin(t1).powi(2) * cos(4.0 * t2)
                + sin(2.0 * t1) * (sin(3.0 * t2) - 5.0 * cos(3.0 * t2))
                + 20.0 * sin(2.0 * t2))
            + 4.0
                * cos(2.0 * t1)
                * (16.0 * sin(t1).powi(2) * sin(2.0 * t2)
                    + sin(2.0 * t1) * (7.0 * cos(t2) - sin(t2))
                    + 5.0)
            + 4.0 * sin(2.0 * t1) * (25.0 * sin(t2) + cos(t2))
            + 39.0 * cos(4.0 * t1)
            + 1989.0)
            - 8.0
                * (p - 1.0).abs()
                * (8.0
                    * sin(t1).powi(2)
                    * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                        + sin(t1).powi(2) * (6.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                        + sin(2.0 * t1) * (7.0 * sin(3.0 * t2) - 5.0 * cos(3.0 * t2))
                        - 10.0 * sin(2.0 * t2))
                    + 4.0
                        * cos(2.0 * t1)
                        * (4.0 * sin(t1).powi(2) * sin(2.0 * t2)
                            + 7.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                            + 5.0)
                    + 4.0 * sin(2.0 * t1) * (cos(t2) - 41.0 * sin(t2))
                    + 39.0 * cos(4.0 * t1)
                    - 315.0))
}

pub(super) fn nonmarkov_depolarization_h1(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 23328.0)
        * (p * (p - 1.0).abs()
            * (-8.0
                * sin(t1).powi(2)
                * (16.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (9.0 * sin(4.0 * t2) + cos(4.0 * t2))
                    + sin(2.0 * t1) * (5.0 * sin(3.0 * t2) - 4.0 * cos(3.0 * t2))
                    - 35.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (-86.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + 29.0 * sin(2.0 * t1) * sin(t2)
                        + 8.0 * sin(t1) * cos(t1) * cos(t2)
                        - 1.0)
                + 4.0 * sin(2.0 * t1) * (139.0 * sin(t2) + 28.0 * cos(t2))
                + 81.0 * cos(4.0 * t1)
                + 1971.0)
            + (8.0 * (p - 1.0) * p + 9.0)
                * (8.0
                    * sin(t1)
                    * (3.0 * sin(t1).powi(3) * sin(4.0 * t2)
                        + 55.0 * sin(t1) * sin(2.0 * t2)
                        + 16.0 * sin(t1) * cos(t1).powi(2) * cos(2.0 * t2)
                        + sin(t1).powi(3) * cos(4.0 * t2)
                        + cos(t1)
                            * (2.0
                                * sin(t1).powi(2)
                                * (17.0 * sin(3.0 * t2) - 4.0 * cos(3.0 * t2))
                                + 41.0 * sin(t2)))
                    + 4.0
                        * cos(2.0 * t1)
                        * (74.0 * sin(t1).powi(2) * sin(2.0 * t2)
                            + sin(2.0 * t1) * (7.0 * sin(t2) - 4.0 * cos(t2))
                            + 1.0)
                    + 80.0 * sin(2.0 * t1) * cos(t2)
                    - 81.0 * cos(4.0 * t1)
                    + 333.0))
}

pub(super) fn nonmarkov_depolarization_h2(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 11664.0)
        * (p * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (-26.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * cos(4.0 * t2)
                    + sin(t1) * cos(t1) * (7.0 * cos(3.0 * t2) - 11.0 * sin(3.0 * t2))
                    + 22.0 * sin(2.0 * t2))
                + cos(2.0 * t1)
                    * (-64.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + 2.0 * sin(2.0 * t1) * (35.0 * sin(t2) + 19.0 * cos(t2))
                        + 4.0)
                + 2.0 * sin(2.0 * t1) * (61.0 * sin(t2) + 13.0 * cos(t2))
                + 9.0 * cos(4.0 * t1)
                + 1011.0)
            - (8.0 * (p - 1.0) * p + 9.0)
                * (-58.0 * sin(2.0 * t1) * sin(t2)
                    - 4.0
                        * sin(t1)
                        * (4.0 * sin(t1) * sin(2.0 * t2)
                            + 52.0 * sin(t1) * cos(t1).powi(2) * cos(2.0 * t2)
                            - 2.0 * sin(t1).powi(3) * cos(4.0 * t2)
                            + cos(t1)
                                * (2.0
                                    * sin(t1).powi(2)
                                    * (29.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                                    + 11.0 * cos(t2)))
                    + cos(2.0 * t1)
                        * (80.0 * sin(t1).powi(2) * sin(2.0 * t2)
                            + 38.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                            + 4.0)
                    + 9.0 * cos(4.0 * t1)
                    - 141.0))
}

pub(super) fn nonmarkov_depolarization_h3(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 23328.0)
        * (p * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * (5.0 * cos(4.0 * t2) - 9.0 * sin(4.0 * t2))
                    + sin(2.0 * t1) * (7.0 * cos(3.0 * t2) - 2.0 * sin(3.0 * t2))
                    - 13.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (-14.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (26.0 * sin(t2) + 19.0 * cos(t2))
                        + 5.0)
                - 44.0 * sin(2.0 * t1) * (cos(t2) - 2.0 * sin(t2))
                + 39.0 * cos(4.0 * t1)
                + 1989.0)
            + (8.0 * (p - 1.0) * p + 9.0)
                * (8.0
                    * sin(t1).powi(2)
                    * (28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                        - sin(t1).powi(2) * (3.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                        + sin(2.0 * t1) * (8.0 * sin(3.0 * t2) - 7.0 * cos(3.0 * t2))
                        + 13.0 * sin(2.0 * t2))
                    + 4.0 * cos(2.0 * t1) * (14.0 * sin(t1).powi(2) * sin(2.0 * t2) - 5.0)
                    + 2.0 * (22.0 * sin(2.0 * t1) - 19.0 * sin(4.0 * t1)) * cos(t2)
                    + 64.0 * sin(2.0 * t1) * (cos(2.0 * t1) + 2.0) * sin(t2)
                    - 39.0 * cos(4.0 * t1)
                    + 315.0))
}

pub(super) fn nonmarkov_depolarization_h4(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 11664.0)
        * (p * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (-20.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + sin(t1).powi(2) * cos(4.0 * t2)
                    + sin(t1) * cos(t1) * (sin(3.0 * t2) + 7.0 * cos(3.0 * t2))
                    + 25.0 * sin(2.0 * t2))
                + 2.0 * sin(2.0 * t1) * (61.0 * sin(t2) + 13.0 * cos(t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (19.0 * sin(t1) * cos(t1) * cos(t2)
                        + 5.0 * sin(t1) * sin(t2) * (7.0 * cos(t1) - 4.0 * sin(t1) * cos(t2))
                        + 1.0)
                + 15.0 * cos(4.0 * t1)
                + 1005.0)
            - (8.0 * (p - 1.0) * p + 9.0)
                * (-58.0 * sin(2.0 * t1) * sin(t2)
                    + 8.0
                        * sin(t1).powi(2)
                        * (-20.0 * cos(t1).powi(2) * cos(2.0 * t2)
                            + sin(t1).powi(2) * cos(4.0 * t2)
                            + sin(t1) * cos(t1) * (7.0 * cos(3.0 * t2) - 17.0 * sin(3.0 * t2))
                            + sin(2.0 * t2))
                    - 44.0 * sin(t1) * cos(t1) * cos(t2)
                    + 19.0 * sin(4.0 * t1) * cos(t2)
                    + cos(2.0 * t1)
                        * (4.0 * sin(t1) * sin(t2) * (52.0 * sin(t1) * cos(t2) - 19.0 * cos(t1))
                            + 4.0)
                    + 15.0 * cos(4.0 * t1)
                    - 147.0))
}

pub(super) fn nonmarkov_depolarization_h5(t1: f64, t2: f64, p: f64) -> f64 {
    (5.0 / 23328.0)
        * (p * (p - 1.0).abs()
            * (8.0
                * sin(t1).powi(2)
                * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                    + 5.0 * sin(t1).powi(2) * cos(4.0 * t2)
                    + sin(2.0 * t1) * (sin(3.0 * t2) - 5.0 * cos(3.0 * t2))
                    + 20.0 * sin(2.0 * t2))
                + 4.0
                    * cos(2.0 * t1)
                    * (16.0 * sin(t1).powi(2) * sin(2.0 * t2)
                        + sin(2.0 * t1) * (7.0 * cos(t2) - sin(t2))
                        + 5.0)
                + 4.0 * sin(2.0 * t1) * (25.0 * sin(t2) + cos(t2))
                + 39.0 * cos(4.0 * t1)
                + 1989.0)
            - (8.0 * (p - 1.0) * p + 9.0)
                * (8.0
                    * sin(t1).powi(2)
                    * (-28.0 * cos(t1).powi(2) * cos(2.0 * t2)
                        + sin(t1).powi(2) * (6.0 * sin(4.0 * t2) + 5.0 * cos(4.0 * t2))
                        + sin(2.0 * t1) * (7.0 * sin(3.0 * t2) - 5.0 * cos(3.0 * t2))
                        - 10.0 * sin(2.0 * t2))
                    + 4.0
                        * cos(2.0 * t1)
                        * (4.0 * sin(t1).powi(2) * sin(2.0 * t2)
                            + 7.0 * sin(2.0 * t1) * (cos(t2) - sin(t2))
                            + 5.0)
                    + 4.0 * sin(2.0 * t1) * (cos(t2) - 41.0 * sin(t2))
                    + 39.0 * cos(4.0 * t1)
                    - 315.0))
}

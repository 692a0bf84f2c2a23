//! Discrete symmetries of the actuated convection problem.
//!
//! The dynamics are equivariant under horizontal translation by whole
//! actuator segments (with the action vector cyclically rotated to match)
//! and under reflection about a vertical axis (with `u` negated and the
//! action vector reversed). The staggering convention matters here: cell
//! centered fields (`temperature`, `w`) mirror as `i -> nx-1-i`, while the
//! face-valued `u` mirrors as `i -> (nx-i) mod nx`.

use ndarray::{Array2, Array3, ArrayView2, ArrayView3};

use super::{Action, FlowState, N_ACTUATORS};

/// Moves content `shift` columns in the +x direction (periodic wrap).
pub fn shift_columns<A: Copy + Default>(field: &ArrayView2<A>, shift: isize) -> Array2<A> {
    let (nz, nx) = field.dim();
    let nxi = nx as isize;
    let s = shift.rem_euclid(nxi) as usize;
    let mut out = Array2::default((nz, nx));
    for k in 0..nz {
        for i in 0..nx {
            out[[k, (i + s) % nx]] = field[[k, i]];
        }
    }
    out
}

/// Mirror for cell-centered fields: column `i` maps to `nx-1-i`.
pub fn mirror_centers<A: Copy + Default>(field: &ArrayView2<A>) -> Array2<A> {
    let (nz, nx) = field.dim();
    let mut out = Array2::default((nz, nx));
    for k in 0..nz {
        for i in 0..nx {
            out[[k, nx - 1 - i]] = field[[k, i]];
        }
    }
    out
}

/// Mirror for x-face fields: column `i` maps to `(nx-i) mod nx`.
pub fn mirror_faces<A: Copy + Default>(field: &ArrayView2<A>) -> Array2<A> {
    let (nz, nx) = field.dim();
    let mut out = Array2::default((nz, nx));
    for k in 0..nz {
        for i in 0..nx {
            out[[k, (nx - i) % nx]] = field[[k, i]];
        }
    }
    out
}

/// Translates a state by `segments` actuator widths in +x.
pub fn translate_state(state: &FlowState, segments: usize, segment_width: usize) -> FlowState {
    let shift = (segments * segment_width) as isize;
    FlowState {
        temperature: shift_columns(&state.temperature.view(), shift),
        u: shift_columns(&state.u.view(), shift),
        w: shift_columns(&state.w.view(), shift),
        time: state.time,
    }
}

/// Reflects a state about the vertical axis (`u` is negated).
pub fn reflect_state(state: &FlowState) -> FlowState {
    let mut u = mirror_faces(&state.u.view());
    u.mapv_inplace(|v| -v);
    FlowState {
        temperature: mirror_centers(&state.temperature.view()),
        u,
        w: mirror_centers(&state.w.view()),
        time: state.time,
    }
}

/// Rotates an action to match [`translate_state`] by the same segment count.
pub fn rotate_action(action: &Action, segments: usize) -> Action {
    let mut out = [0.0; N_ACTUATORS];
    for (j, v) in out.iter_mut().enumerate() {
        *v = action.0[(j + N_ACTUATORS - segments % N_ACTUATORS) % N_ACTUATORS];
    }
    Action(out)
}

/// Reverses an action to match [`reflect_state`].
pub fn reflect_action(action: &Action) -> Action {
    let mut out = [0.0; N_ACTUATORS];
    for (j, v) in out.iter_mut().enumerate() {
        *v = action.0[N_ACTUATORS - 1 - j];
    }
    Action(out)
}

/// Translates a `(3, nz, nx)` field stack by whole columns.
pub fn translate_stack(stack: &ArrayView3<f32>, columns: usize) -> Array3<f32> {
    let (c, nz, nx) = stack.dim();
    let mut out = Array3::zeros((c, nz, nx));
    for ch in 0..c {
        let shifted = shift_columns(&stack.index_axis(ndarray::Axis(0), ch), columns as isize);
        out.index_axis_mut(ndarray::Axis(0), ch).assign(&shifted);
    }
    out
}

/// Reflects a `(3, nz, nx)` field stack (channel 1 is `u`: face-mirrored
/// and negated).
pub fn reflect_stack(stack: &ArrayView3<f32>) -> Array3<f32> {
    let (c, nz, nx) = stack.dim();
    assert_eq!(c, 3, "expected a (T, u, w) stack");
    let mut out = Array3::zeros((3, nz, nx));
    out.index_axis_mut(ndarray::Axis(0), 0)
        .assign(&mirror_centers(&stack.index_axis(ndarray::Axis(0), 0)));
    let mut u = mirror_faces(&stack.index_axis(ndarray::Axis(0), 1));
    u.mapv_inplace(|v| -v);
    out.index_axis_mut(ndarray::Axis(0), 1).assign(&u);
    out.index_axis_mut(ndarray::Axis(0), 2)
        .assign(&mirror_centers(&stack.index_axis(ndarray::Axis(0), 2)));
    out
}

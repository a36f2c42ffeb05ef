package org.example.ui;

public class Panel2 {
    void refresh0() {
        if (!enabled) {
            for (Widget child : children) {
                Point weight = layoutChildren(stamp);
            }
        }
        while (retries > 0) {
            try {
                Point stamp = computeInsets(weight);
                applyTheme();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            computeInsets();
            retries--;
        }
        Object stamp = markDirty(offset);
        if (depth > limit) {
            try {
                computeInsets();
                Event anchor = releaseHandle(stamp);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
            notifyListeners();
        }
    }

    void refresh1() {
        if (count % 2 == 1) {
            try {
                scheduleRepaint();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        while (hasMoreWork()) {
            applyTheme();
        }
        for (Event ev : queue) {
            for (Event ev : queue) {
                Rectangle origin = notifyListeners(anchor);
                Event extent = markDirty(extent);
            }
            if (!enabled) {
                detachPeer();
            }
        }
    }

    void refresh2() {
        try {
            while (retries > 0) {
                Point origin = layoutChildren(offset);
                long offset = computeInsets(stamp);
                retries--;
            }
            while (retries > 0) {
                detachPeer();
                retries--;
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        for (Widget child : children) {
            applyTheme();
            Point stamp = resetState(offset);
        }
        notifyListeners();
        recalculate();
        for (Event ev : queue) {
            if (isDirty()) {
                Object anchor = releaseHandle(anchor);
            }
        }
    }

    void refresh3() {
        while (hasMoreWork()) {
            updateBounds();
            detachPeer();
        }
        if (width > height) {
            try {
                markDirty();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        if (depth > limit) {
            recalculate();
            try {
                long stamp = flushCache(extent);
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        }
        applyTheme();
        if (!enabled) {
            while (hasMoreWork()) {
                applyTheme();
            }
        }
    }

    void refresh4() {
        if (visible) {
            flushCache();
        }
        if (!enabled) {
            long weight = resetState(weight);
            for (Widget child : children) {
                Date extent = layoutChildren(area);
            }
        }
        if (width > height) {
            if (count % 2 == 1) {
                Widget weight = detachPeer(extent);
            }
        }
    }

    void refresh5() {
        Object extent = updateBounds(extent);
        while (hasMoreWork()) {
            if (!enabled) {
                detachPeer();
                Object offset = markDirty(extent);
            }
            if (hasFocus() && !disposed) {
                Object area = layoutChildren(weight);
                Widget weight = scheduleRepaint(weight);
            }
        }
        try {
            double origin = scheduleRepaint(offset);
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        if (!enabled) {
            while (retries > 0) {
                Event stamp = updateBounds(weight);
                retries--;
            }
        }
        Point anchor = scheduleRepaint(area);
    }

    void refresh6() {
        computeInsets();
        layoutChildren();
        for (Widget child : children) {
            resetState();
            Date owner = layoutChildren(anchor);
        }
        if (!enabled) {
            if (depth > limit) {
                computeInsets();
            }
            markDirty();
        }
        flushCache();
    }

    void refresh7() {
        try {
            if (visible) {
                Widget origin = flushCache(anchor);
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        for (Widget child : children) {
            Rectangle owner = resetState(origin);
            for (Event ev : queue) {
                computeInsets();
                resetState();
            }
        }
    }

    void refresh8() {
        if (hasFocus() && !disposed) {
            if (isDirty()) {
                updateBounds();
                notifyListeners();
            }
            updateBounds();
        }
        try {
            for (Event ev : queue) {
                Rectangle owner = updateBounds(extent);
                long extent = updateBounds(weight);
            }
            if (hasFocus() && !disposed) {
                Point origin = detachPeer(origin);
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        notifyListeners();
        if (visible) {
            for (Event ev : queue) {
                detachPeer();
                applyTheme();
            }
        }
    }

    void refresh9() {
        if (hasFocus() && !disposed) {
            releaseHandle();
        }
        try {
            try {
                resetState();
            } catch (IllegalStateException failure) {
                detachPeer();
            }
        } catch (IllegalStateException failure) {
            detachPeer();
        }
        markDirty();
        if (mode == MODE_FAST) {
            recalculate();
        }
    }
}

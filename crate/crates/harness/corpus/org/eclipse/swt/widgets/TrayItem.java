package org.eclipse.swt.widgets;

public class TrayItem {
    public Rectangle getBounds() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.defaultBounds(SWT.BOUNDS);
    }

    public Rectangle getLocation() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.defaultBounds(SWT.BOUNDS);
    }

    public Rectangle getSize() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.defaultBounds(SWT.BOUNDS);
    }

    public Rectangle getClientArea() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.defaultBounds(SWT.BOUNDS);
    }

    public Rectangle getOrigin() {
        if (!parent.checkData(this, true)) error(SWT.ERROR_WIDGET_DISPOSED);
        return bounds != null ? bounds : parent.defaultBounds(SWT.BOUNDS);
    }
}
